from enum import Enum


class KindSymbol(str, Enum):
    su = "SU"
    so = "SO"
    spin = "Spin"
    sp = "Sp"
    u = "U"
    su_composite = "SU{}"
    g2 = "G2"
    torus = "T"


class FieldTag(str, Enum):
    real = "R"
    complex = "C"
    quaternionic = "H"


class NamedTag(str, Enum):
    g2so7 = "g2so7"
    spin7so8 = "spin7so8"
    irr3in5 = "irr3in5"
    irr3in3c = "irr3in3c"
    dsp1 = "dsp1"
    du1 = "du1"
    sigma = "sigma"


class Marker(str, Enum):
    """Non-numeric outcomes of order computations."""
    infinite = "infinite"
    unknown = "unknown"
