from .tests_AmbientConfig import TestAmbientConfig
from .tests_Morphism import TestMorphism
