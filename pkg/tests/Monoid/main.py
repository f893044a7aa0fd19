import unittest

from tests_MonoidPresentation import TestMonoidPresentation, TestLocalizedMonoid
from tests_LocalizationCheck import TestLocalizationCheck


if __name__ == '__main__':
    unittest.main()
