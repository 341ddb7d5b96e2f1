from .main import ExitCode, build_parser, cmd_gen, cmd_run, cmd_suite, cmd_verify, main
from .reports import RunReport
from .streamio import StreamHeader, load_oracle, read_stream, write_stream

__all__ = [
    "ExitCode",
    "RunReport",
    "StreamHeader",
    "build_parser",
    "cmd_gen",
    "cmd_run",
    "cmd_suite",
    "cmd_verify",
    "load_oracle",
    "main",
    "read_stream",
    "write_stream",
]
