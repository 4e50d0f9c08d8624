"""Query-order constrained oracle machines.

Bit strings are plain ``str`` values over "0"/"1". Formulas, graphs,
transcripts, oracle and machine handles and stage certificates are the JSON
documents the ``qmono`` command-line tool prints, as dicts and lists.
"""

from ._qmono import *  # noqa: F401,F403
from ._qmono import (  # noqa: F401
    ConfigurationError,
    InternalConsistencyError,
    InvalidInput,
    ResourceError,
    StagingViolation,
)
