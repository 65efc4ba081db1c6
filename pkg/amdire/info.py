"""Tool information."""

from os import getpid
from socket import gethostname

from amdire.utils import webuuid

#: Tool name
TOOL_NAME = "amdire"

#: Tool version
TOOL_VERSION = "1.0.0"

#: Unique run ID
RUN_ID = webuuid()

#: Unique run full name
RUN_NAME = f"{gethostname()}-{getpid()}-{RUN_ID}"
