from .base import GateStep, StepRegistry
from .transfer import ArpTransferStep, PiPulseStep, StirapTransferStep
from .rotation import MicrowaveRotationStep, QubitRotationStep
from .forster import ForsterPassageStep

__all__ = [
    "GateStep",
    "StepRegistry",
    "ArpTransferStep",
    "PiPulseStep",
    "StirapTransferStep",
    "MicrowaveRotationStep",
    "QubitRotationStep",
    "ForsterPassageStep",
]

# Register all steps
StepRegistry.register(StirapTransferStep)
StepRegistry.register(ArpTransferStep)
StepRegistry.register(PiPulseStep)
StepRegistry.register(MicrowaveRotationStep)
StepRegistry.register(QubitRotationStep)
StepRegistry.register(ForsterPassageStep)
