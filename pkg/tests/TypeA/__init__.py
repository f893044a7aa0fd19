from .tests_Representation import TestRepresentation
from .tests_TypeAModules import TestTypeAModules
