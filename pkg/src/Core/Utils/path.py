from os.path import join, isdir, abspath, isabs, exists
from os import makedirs, getcwd


def get_output_dir(output_dir: str) -> str:
    """
    Absolute path of the output directory, relative paths being read from the working directory.
    """

    if len(output_dir) == 0:
        raise ValueError("Impossible to write the reports: empty 'output_dir'.")
    return output_dir if isabs(output_dir) else abspath(join(getcwd(), output_dir))


def create_dir(output_dir: str, sub_dir: str = '', verbose: bool = False) -> str:
    """
    Create the directory receiving the files of a command. An existing directory is reused and its files are
    overwritten, so that identical runs leave identical trees.

    :param output_dir: Root directory of the outputs.
    :param sub_dir: Optional subdirectory, usually the command name.
    :param verbose: If True, print the created path.
    :return: Path to the directory.
    """

    directory = join(get_output_dir(output_dir), sub_dir) if sub_dir else get_output_dir(output_dir)
    if exists(directory) and not isdir(directory):
        raise ValueError(f"Impossible to create the output directory: {directory} is a file.")
    if not isdir(directory):
        makedirs(directory)
        if verbose:
            print(f"Create a new directory {directory} for the reports.")
    return directory
