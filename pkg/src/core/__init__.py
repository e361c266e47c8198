from dotenv import load_dotenv
from .config import config
from .console import broadcast, set_verbose
from .process_controller import ProcessController, WorkflowFunc


__all__ = [
    "config",
    "broadcast",
    "set_verbose",
    "ProcessController",
    "WorkflowFunc",
]

load_dotenv()
