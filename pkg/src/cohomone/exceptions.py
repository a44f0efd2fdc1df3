from typing import Any, Optional


class CohomoneException(Exception):
    def __init__(self, **kwargs):
        """
        :key message: (detailed) error message
        :key error_code: Short error description
        :key exit_code: Process exit code used by the command line front end
        :key offset: Byte offset into the parsed input, if the error stems from parsing
        :key extra: Dictionary of extra information
        """
        super().__init__()

        self.message = kwargs.get('message', 'An unknown error has occurred')
        self.code = kwargs.get('error_code', 'Error')
        self.exit_code = kwargs.get('exit_code', 2)
        self.offset: Optional[int] = kwargs.get('offset')
        self.extra: Optional[dict[str, Any]] = kwargs.get('extra')

    def __str__(self):
        if self.offset is not None:
            return f'{self.code} at byte {self.offset}: {self.message}'

        return f'{self.code}: {self.message}'

    def to_dict(self) -> dict[str, Any]:
        return {
            'error': self.code,
            'message': self.message,
            'offset': self.offset,
            'extra': self.extra,
        }


class GroupSyntaxException(CohomoneException):
    """Exception raised when a group or diagram expression does not conform to the grammar."""

    def __init__(self, **kwargs):
        """
        See keys of :class:`CohomoneException`.

        :key text: The text that was being parsed
        """
        text = kwargs.pop('text', None)
        extra = kwargs.pop('extra', None) or ({'text': text} if text is not None else None)
        super().__init__(error_code='Syntax Error', extra=extra, **kwargs)


class GroupSemanticException(CohomoneException):
    """
    Exception raised when an expression parses but does not denote a valid group, e.g. overlapping blocks or a weight
    vector whose length does not match the ambient group.
    """

    def __init__(self, **kwargs):
        super().__init__(error_code='Semantic Error', **kwargs)


class InconsistentDescriptorException(CohomoneException):
    """
    Exception raised when the invariants of a descriptor contradict each other, e.g. a Weyl order ratio that is not an
    integer, or a recognized sphere pattern whose dimension differs from dim(K) - dim(H).
    """

    def __init__(self, **kwargs):
        super().__init__(error_code='Inconsistent Descriptor', **kwargs)


class OutOfRangeException(CohomoneException):
    """Exception raised when a catalog entry is instantiated outside of its parameter range."""

    def __init__(self, **kwargs):
        """
        See keys of :class:`CohomoneException`.

        :key entry_id: Identifier of the catalog entry
        :key n: The requested parameter value
        """
        entry_id = kwargs.pop('entry_id', None)
        n = kwargs.pop('n', None)
        msg = kwargs.pop('message', f"Parameter n={n} is outside the range of catalog entry '{entry_id}'.")
        super().__init__(error_code='Out Of Range', message=msg, extra={'entry_id': entry_id, 'n': n}, **kwargs)


class UnsupportedGroupException(CohomoneException):
    """Exception raised when an operation is requested for a group it is not defined for."""

    def __init__(self, **kwargs):
        super().__init__(error_code='Unsupported Group', **kwargs)
