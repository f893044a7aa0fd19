from .tests_configs import TestConfigs
from .tests_jsonUtils import TestJsonUtils
from .tests_SvgRenderer import TestSvgRenderer
