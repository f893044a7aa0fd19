from .tests_FGDecomposition import TestFGDecomposition
from .tests_SnakeLemma import TestSnakeLemma, TestStarEquality
