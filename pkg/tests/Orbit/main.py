import unittest

from tests_OrbitCategory import TestOrbitCategory
from tests_ARQuiver import TestARQuiver


if __name__ == '__main__':
    unittest.main()
