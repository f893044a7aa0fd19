from .tests_RunConfig import TestRunConfig
from .tests_Pipelines import TestPipelines
from .tests_ReportManager import TestReportManager
from .tests_cli import TestCli
