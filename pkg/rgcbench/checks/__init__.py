'''Module containing all the checks of the workbench'''
from typing import List, Type

from .custom_check import CustomCheck as Check
from .axioms import AxiomsCheck
from .canonical import CanonicalCheck
from .classical import ClassicalCheck
from .dsquared import DSquaredCheck
from .pcy import PcyCheck
from .recolor_acyclic import RecolorAcyclicCheck
from .rgc_orgc import RgcOrgcCheck

CHECKS: List[Type[Check]] = [
    DSquaredCheck,
    RgcOrgcCheck,
    AxiomsCheck,
    RecolorAcyclicCheck,
    PcyCheck,
    ClassicalCheck,
    CanonicalCheck,
]
