from typing import Any, Dict, List, Optional
from os.path import join
from time import perf_counter

from NegCat.Core import __version__
from NegCat.Core.Utils.jsonUtils import dump_report
from NegCat.Core.Utils.path import create_dir


class ReportManager:

    def __init__(self,
                 command: str,
                 inputs: Dict[str, Any],
                 output_dir: str = 'negcat_output',
                 timings: bool = False,
                 verbose: bool = False):
        """
        ReportManager collects the results of a command and writes them with the companion drawings into the
        output directory. Timings are recorded when required only, so that runs with the same inputs write
        identical files.

        :param command: Name of the command.
        :param inputs: Parameters of the run.
        :param output_dir: Path to the output directory.
        :param timings: If True, the elapsed time of every step is written in the report.
        :param verbose: If True, print the written files.
        """

        self.name: str = self.__class__.__name__

        # Report variables
        self.command: str = command
        self.inputs: Dict[str, Any] = dict(inputs)
        self.results: Dict[str, Any] = {}
        self.assertions: Dict[str, bool] = {}
        self.files: Dict[str, str] = {}

        # Session variables
        self.output_dir: str = output_dir
        self.timings: Optional[Dict[str, float]] = {} if timings else None
        self.verbose: bool = verbose
        self.__started: Dict[str, float] = {}

    # ######################################################################################################## #
    #                                              Collected values                                            #
    # ######################################################################################################## #

    def add_result(self, key: str, value: Any) -> None:
        self.results[key] = value

    def add_assertion(self, key: str, value: bool) -> None:
        """
        Record a checked statement. The exit code of the command is 0 iff every assertion holds.
        """

        self.assertions[key] = bool(value)

    def add_file(self, filename: str, content: str) -> None:
        self.files[filename] = content

    def start(self, step: str) -> None:
        if self.timings is not None:
            self.__started[step] = perf_counter()

    def stop(self, step: str) -> None:
        if self.timings is not None and step in self.__started:
            self.timings[step] = round(perf_counter() - self.__started.pop(step), 6)

    @property
    def passed(self) -> bool:
        return all(self.assertions.values())

    def failures(self) -> List[str]:
        return sorted(key for key, value in self.assertions.items() if not value)

    # ######################################################################################################## #
    #                                                  Writing                                                 #
    # ######################################################################################################## #

    def content(self) -> Dict[str, Any]:
        report = {'command': self.command,
                  'inputs': self.inputs,
                  'results': self.results,
                  'assertions': self.assertions,
                  'passed': self.passed,
                  'version': __version__}
        if self.timings is not None:
            report['timings'] = self.timings
        return report

    def write(self) -> str:
        """
        Write report.json and the registered files.

        :return: Path to the directory of the command.
        """

        directory = create_dir(self.output_dir, self.command, self.verbose)
        dump_report(self.content(), join(directory, 'report.json'))
        for filename, content in sorted(self.files.items()):
            with open(join(directory, filename), 'w') as file:
                file.write(content)
        if self.verbose:
            print(f"[{self.name}] Report written in {directory}")
        return directory

    def __str__(self) -> str:

        description = "\n"
        description += f"# {self.name}\n"
        description += f"    Command: {self.command}\n"
        description += f"    Passed: {self.passed}\n"
        if self.failures():
            description += f"    Failures: {', '.join(self.failures())}\n"
        return description
