from .tests_ARQuiver import TestARQuiver
from .tests_OrbitCategory import TestOrbitCategory
