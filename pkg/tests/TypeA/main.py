import unittest

from tests_TypeAModules import TestTypeAModules
from tests_Representation import TestRepresentation


if __name__ == '__main__':
    unittest.main()
