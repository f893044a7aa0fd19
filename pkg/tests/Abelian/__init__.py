from .tests_SimpleMindedSystem import TestSimpleMindedSystem, TestExtensionTable
from .tests_AbelianSubcategory import TestAbelianSubcategory
from .tests_AbelianStructure import TestAbelianStructure
