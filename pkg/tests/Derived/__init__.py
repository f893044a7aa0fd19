from .tests_DerivedCategory import TestDerivedCategory
from .tests_ZACoordinates import TestZACoordinates
