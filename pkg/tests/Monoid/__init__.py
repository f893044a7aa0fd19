from .tests_MonoidPresentation import TestMonoidPresentation, TestLocalizedMonoid
from .tests_LocalizationCheck import TestLocalizationCheck
