"""
The catalog of cohomogeneity one diagrams with positive Euler characteristic of the simple classical groups.

Each record gives H, K- and K+ as templates in the family parameter n (see :func:`cohomone.catalog.templates.render`),
embedded in the ambient of G, or in SO(m) for records at spin level. Records with the source 'result list' carry the
printed Euler characteristic; records from the case analysis of single groups carry none.
"""

RESULT = 'result list'
CASE_ANALYSIS = 'case analysis'

CATALOG_DOCUMENT = {
    'entries': [
        # SU(3)
        {
            'id': 'su3-so3-u2', 'family': 'SU', 'n_min': 3, 'n_max': 3,
            'h': 'S1[w(1,-1,0)]', 'kminus': 'SO(3)@[1..3]', 'kplus': 'SU{1,2}@[1..3]',
            'printed_chi': '3', 'source': RESULT,
        },
        {
            'id': 'su3-so3-t2', 'family': 'SU', 'n_min': 3, 'n_max': 3,
            'h': 'S1[w(1,-1,0)]', 'kminus': 'SO(3)@[1..3]', 'kplus': 'SU{1,1,1}@[1..3]',
            'printed_chi': '6', 'source': RESULT,
        },
        {
            'id': 'su3-z3-so3-t2', 'family': 'SU', 'n_min': 3, 'n_max': 3,
            'h': 'Z3.S1[w(1,-1,0)]', 'kminus': 'Z3.SO(3)@[1..3]', 'kplus': 'SU{1,1,1}@[1..3]',
            'printed_chi': '6', 'source': RESULT,
            'notes': 'Z3 is the center of SU(3).',
        },
        {
            'id': 'su3-su2-u2', 'family': 'SU', 'n_min': 3, 'n_max': 3,
            'h': 'S1[w(-1,1,0)]', 'kminus': 'SU(2)@[1..2]', 'kplus': 'SU{1,2}@[1..3]',
            'printed_chi': None, 'source': CASE_ANALYSIS,
            'notes': 'SU(3) acting on the quaternionic projective plane.',
        },
        {
            'id': 'su3-u2-u2', 'family': 'SU', 'n_min': 3, 'n_max': 3,
            'h': 'S1[w(-1,0,1)]', 'kminus': 'SU{2,1}@[1..3]', 'kplus': 'SU{1,2}@[1..3]',
            'printed_chi': None, 'source': CASE_ANALYSIS,
            'notes': 'SU(3) acting on the Grassmannian SU(4)/S(U(2)U(2)).',
        },
        # SU(4)
        {
            'id': 'su4-circle-su2', 'family': 'SU', 'n_min': 4, 'n_max': 4,
            'h': 'S1[w(-2,4,-1,-1)]xSU(2)@[3..4]', 'kminus': 'SU{2,2}@[1..4]', 'kplus': 'SU{1,3}@[1..4]',
            'printed_chi': '10', 'source': RESULT,
            'notes': 'The circle lies in the normalizer of SU(2).',
        },
        {
            'id': 'su4-sigma', 'family': 'SU', 'n_min': 4, 'n_max': 4,
            'h': 'S1[w(-1,1,0,0)]xSU(2)@[3..4]', 'kminus': 'SU{1,3}#sigma(2,1,3,4)', 'kplus': 'SU{1,3}@[1..4]',
            'printed_chi': '8', 'source': RESULT,
            'notes': 'sigma exchanges the first two coordinates; H contains the SU(2) of the last two coordinates, '
                     'as for the SU(n) family at n = 4.',
        },
        {
            'id': 'su4-circle-su2-grassmannian', 'family': 'SU', 'n_min': 4, 'n_max': 4,
            'h': 'S1[w(-2,0,1,1)]xSU(2)@[3..4]', 'kminus': 'SU{2,2}@[1..4]', 'kplus': 'SU{1,3}@[1..4]',
            'printed_chi': None, 'source': CASE_ANALYSIS,
        },
        # SU(n), n >= 5
        {
            'id': 'sun-sigma', 'family': 'SU', 'n_min': 5, 'n_max': None,
            'h': 'S1[w(-1,1,<0^{n-2}>)]xSU({n-2})@[3..{n}]',
            'kminus': 'SU{1,{n-1}}#sigma(2,1,<3..{n}>)',
            'kplus': 'SU{1,{n-1}}@[1..{n}]',
            'printed_chi': '2*n', 'source': RESULT,
            'notes': 'sigma exchanges the first two coordinates.',
        },
        {
            'id': 'sun-normalizer', 'family': 'SU', 'n_min': 5, 'n_max': None,
            'h': 'S1[w({2-n},{2*(n-2)},<-1^{n-2}>)]xSU({n-2})@[3..{n}]',
            'kminus': 'SU{2,{n-2}}@[1..{n}]',
            'kplus': 'SU{1,{n-1}}@[1..{n}]',
            'printed_chi': 'n*(n+1)/2', 'source': RESULT,
            'notes': 'The circle lies in the normalizer of SU(n-2); at n = 4 this is the SU(4) record su4-circle-su2.',
        },
        # SO(2n+1)
        {
            'id': 'so7-g2-u3', 'family': 'SO-odd', 'n_min': 3, 'n_max': 3,
            'h': 'SU(3)@[1..6]', 'kminus': 'G2#g2so7', 'kplus': 'U(3)@[1..6]',
            'printed_chi': '8', 'source': RESULT,
        },
        {
            'id': 'so9-g2-u4', 'family': 'SO-odd', 'n_min': 4, 'n_max': 4,
            'h': 'SU(3)@[1..6]xSO(2)@[7..8]', 'kminus': 'G2#g2so7(1,2,3,4,5,6,9)xSO(2)@[7..8]', 'kplus': 'U(4)@[1..8]',
            'printed_chi': '16', 'source': RESULT,
        },
        {
            'id': 'so-odd-u2', 'family': 'SO-odd', 'n_min': 3, 'n_max': None,
            'h': 'SO(2)@[1..2]xSO({2*n-3})@[5..{2*n+1}]', 'kminus': 'U(2)@[1..4]xSO({2*n-3})@[5..{2*n+1}]',
            'kplus': 'SO(2)@[1..2]xSO({2*n-2})@[4..{2*n+1}]',
            'printed_chi': '2*n*(n+1)', 'source': RESULT,
            'notes': 'The SO(2n-2) of K+ rotates coordinate 4 along with the block of H, while K- pairs it with '
                     'coordinate 3; K+ is realized on standard planes after relabeling the coordinates.',
        },
        {
            'id': 'so-odd-irreducible-so3', 'family': 'SO-odd', 'n_min': 3, 'n_max': None,
            'h': 'S1[w(1,2,<0^{n-2}>)]xS1[w(0,0,<1^{n-2}>)]xSU({n-2})@[5..{2*n}]',
            'kminus': 'SO(3)#irr3in5(1,2,3,4,{2*n+1})xS1[w(0,0,<1^{n-2}>)]xSU({n-2})@[5..{2*n}]',
            'kplus': 'SO(2)@[1..2]xU({n-1})@[3..{2*n}]',
            'printed_chi': 'n*2^n', 'source': RESULT,
            'notes': 'SO(3) acts irreducibly on the first two planes and the last coordinate.',
        },
        # Spin(2n+1), given in SO(2n+1)
        {
            'id': 'spin7-circle-k1', 'family': 'Spin-odd', 'n_min': 3, 'n_max': 3,
            'h': 'S1[w(2,1,1)]xSU(2)@[3..6]', 'kminus': 'U(3)@[1..6]', 'kplus': 'SO(2)@[1..2]xSO(5)@[3..7]',
            'printed_chi': '14', 'source': RESULT, 'spin_level': True,
        },
        {
            'id': 'spin7-circle-k-3', 'family': 'Spin-odd', 'n_min': 3, 'n_max': 3,
            'h': 'S1[w(2,-3,-3)]xSU(2)@[3..6]', 'kminus': 'U(3)@[1..6]', 'kplus': 'SO(2)@[1..2]xSO(5)@[3..7]',
            'printed_chi': '14', 'source': RESULT, 'spin_level': True,
        },
        {
            'id': 'spin7-g2-so6', 'family': 'Spin-odd', 'n_min': 3, 'n_max': 3,
            'h': 'SU(3)@[1..6]', 'kminus': 'G2#g2so7', 'kplus': 'SO(6)@[1..6]',
            'printed_chi': '2', 'source': RESULT, 'spin_level': True,
        },
        {
            'id': 'spin7-g2-u3', 'family': 'Spin-odd', 'n_min': 3, 'n_max': 3,
            'h': 'SU(3)@[1..6]', 'kminus': 'G2#g2so7', 'kplus': 'U(3)@[1..6]',
            'printed_chi': '8', 'source': RESULT, 'spin_level': True,
        },
        {
            'id': 'spin9-g2-u4', 'family': 'Spin-odd', 'n_min': 4, 'n_max': 4,
            'h': 'SU(3)@[1..6]xSO(2)@[7..8]', 'kminus': 'G2#g2so7(1,2,3,4,5,6,9)xSO(2)@[7..8]', 'kplus': 'U(4)@[1..8]',
            'printed_chi': '16', 'source': RESULT, 'spin_level': True,
            'notes': 'The SO(9) record so9-g2-u4 read at spin level.',
        },
        {
            'id': 'spin9-quaternionic-circle', 'family': 'Spin-odd', 'n_min': 4, 'n_max': 4,
            'h': 'SU(2)@[1..4]xS1[w(1,1,1,1)]xSU(2)@[5..8]',
            'kminus': 'U(2)@[1..4]xSO(5)@[5..9]',
            'kplus': 'SO(5)#sigma(1,2,3,4,9,5,6,7,8)xU(2)@[5..8]',
            'printed_chi': '48', 'source': RESULT, 'spin_level': True,
            'notes': 'The circle with equal weights on both halves.',
        },
        # Sp(n)
        {
            'id': 'sp-diagonal-sp1', 'family': 'Sp', 'n_min': 2, 'n_max': None,
            'h': 'Sp(1)#dsp1(1,2)xSp({n-2})@[3..{n}]',
            'kminus': 'S1[w(1,-1,<0^{n-2}>)]xSp(1)#dsp1(1,2)xSp({n-2})@[3..{n}]',
            'kplus': 'Sp(1)@[1..1]xSp({n-1})@[2..{n}]',
            'printed_chi': 'n*(2*n-1)', 'source': RESULT,
            'notes': 'The circle is the standard SO(2) of the first Sp(2) block.',
        },
        {
            'id': 'sp2-z2-diagonal-sp1', 'family': 'Sp', 'n_min': 2, 'n_max': 2,
            'h': 'Z2.Sp(1)#dsp1(1,2)',
            'kminus': 'S1[w(1,-1)]xSp(1)#dsp1(1,2)',
            'kplus': 'Z2.Sp(1)@[1..1]xSp(1)@[2..2]',
            'printed_chi': '8', 'source': RESULT,
            'notes': 'Z2 exchanges the two coordinates.',
        },
        {
            'id': 'sp-u2', 'family': 'Sp', 'n_min': 2, 'n_max': None,
            'h': 'S1[w(1,-2,<0^{n-2}>)]xSp({n-2})@[3..{n}]',
            'kminus': 'U(2)@[1..2]xSp({n-2})@[3..{n}]',
            'kplus': 'U(1)@[1..1]xSp({n-1})@[2..{n}]',
            'printed_chi': '2*n^2', 'source': RESULT,
        },
        {
            'id': 'sp-irreducible-sp1', 'family': 'Sp', 'n_min': 2, 'n_max': None,
            'h': 'S1[w(1,3,<0^{n-2}>)]xSp({n-2})@[3..{n}]',
            'kminus': 'Sp(1)#irr3in5(1,2)xSp({n-2})@[3..{n}]',
            'kplus': 'U(1)@[1..1]xSp({n-1})@[2..{n}]',
            'printed_chi': '3*n', 'source': RESULT,
            'notes': 'Sp(1) acts on the first two coordinates through the irreducible SO(3) in SO(5).',
        },
        {
            'id': 'sp-torus', 'family': 'Sp', 'n_min': 3, 'n_max': None,
            'h': 'S1[w(1,1,1,<0^{n-3}>)]xS1[w(0,1,-1,<0^{n-3}>)]xSp({n-3})@[4..{n}]',
            'kminus': 'S1[w(1,1,1,<0^{n-3}>)]xSO(3)#sigma(2,3,1,<4..{n}>)xSp({n-3})@[4..{n}]',
            'kplus': 'U(1)@[1..1]xU(1)@[2..2]xSp({n-2})@[3..{n}]',
            'printed_chi': '4*n*(n-1)', 'source': RESULT,
            'notes': 'SO(3) is the real form on the first three coordinates, conjugated so that its torus is '
                     'diag(1, z, 1/z).',
        },
        # SO(2n)
        {
            'id': 'so8-spin7-u4', 'family': 'SO-even', 'n_min': 4, 'n_max': 4,
            'h': 'SU(4)@[1..8]', 'kminus': 'Spin(7)#spin7so8', 'kplus': 'U(4)@[1..8]',
            'printed_chi': '8', 'source': RESULT,
        },
        {
            'id': 'so10-spin7-u5', 'family': 'SO-even', 'n_min': 5, 'n_max': 5,
            'h': 'SU(4)@[1..8]xSO(2)@[9..10]', 'kminus': 'Spin(7)#spin7so8(1,2,3,4,5,6,7,8)xSO(2)@[9..10]',
            'kplus': 'U(5)@[1..10]',
            'printed_chi': '16', 'source': RESULT,
        },
        {
            'id': 'so-even-sigma', 'family': 'SO-even', 'n_min': 4, 'n_max': None,
            'h': 'SO(2)@[1..2]xSU({n-1})@[3..{2*n}]',
            'kminus': 'U({n})#sigma(-1,<2..{2*n}>)',
            'kplus': 'U({n})@[1..{2*n}]',
            'printed_chi': '2^(n+1)', 'source': RESULT,
            'notes': 'sigma is the conjugation by diag(-1, 1, ..., 1).',
        },
        {
            'id': 'so-even-torus', 'family': 'SO-even', 'n_min': 4, 'n_max': None,
            'h': 'SO(2)@[1..2]xS1[w(0,0,<1^{n-2}>)]xSU({n-2})@[5..{2*n}]',
            'kminus': 'SO(3)@[1..3]xS1[w(0,0,<1^{n-2}>)]xSU({n-2})@[5..{2*n}]',
            'kplus': 'SO(2)@[1..2]xU({n-1})@[3..{2*n}]',
            'printed_chi': 'n*2^(n-1)', 'source': RESULT,
        },
        # SO(6) = SU(4)/{1, -1}
        {
            'id': 'so6-so4-so5', 'family': 'SO-even', 'n_min': 3, 'n_max': 3,
            'h': 'SO(4)@[3..6]', 'kminus': 'SO(5)@[2..6]', 'kplus': 'SO(2)@[1..2]xSO(4)@[3..6]',
            'printed_chi': None, 'source': CASE_ANALYSIS,
            'notes': 'The Grassmannian SO(7)/SO(2)SO(5).',
        },
        {
            'id': 'so6-z2-so4-so5', 'family': 'SO-even', 'n_min': 3, 'n_max': 3,
            'h': 'Z2.SO(4)@[3..6]', 'kminus': 'Z2.SO(5)@[2..6]', 'kplus': 'SO(2)@[1..2]xSO(4)@[3..6]',
            'printed_chi': None, 'source': CASE_ANALYSIS,
        },
        {
            'id': 'so6-so3-so3', 'family': 'SO-even', 'n_min': 3, 'n_max': 3,
            'h': 'SO(2)@[1..2]xSO(3)@[4..6]', 'kminus': 'SO(3)@[1..3]xSO(3)@[4..6]',
            'kplus': 'SO(2)@[1..2]xSO(4)@[3..6]',
            'printed_chi': None, 'source': CASE_ANALYSIS,
        },
        {
            'id': 'so6-so2-so3-u2', 'family': 'SO-even', 'n_min': 3, 'n_max': 3,
            'h': 'SO(2)@[1..2]xSO(2)@[5..6]', 'kminus': 'SO(2)@[1..2]xSO(3)@[4..6]',
            'kplus': 'U(2)@[1..4]xSO(2)@[5..6]',
            'printed_chi': None, 'source': CASE_ANALYSIS,
        },
        {
            'id': 'so6-u2-so4-u3', 'family': 'SO-even', 'n_min': 3, 'n_max': 3,
            'h': 'U(2)@[1..4]', 'kminus': 'SO(4)@[1..4]', 'kplus': 'U(3)@[1..6]',
            'printed_chi': None, 'source': CASE_ANALYSIS,
        },
        {
            'id': 'so6-torus-so3-u2', 'family': 'SO-even', 'n_min': 3, 'n_max': 3,
            'h': 'SO(2)@[1..2]xSO(2)@[5..6]', 'kminus': 'SO(3)@[1..3]xSO(2)@[5..6]',
            'kplus': 'SO(2)@[1..2]xU(2)@[3..6]',
            'printed_chi': None, 'source': CASE_ANALYSIS,
        },
    ],
}
