import unittest

from tests_AmbientConfig import TestAmbientConfig
from tests_Morphism import TestMorphism


if __name__ == '__main__':
    unittest.main()
