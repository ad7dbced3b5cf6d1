"""Functions for printing, warning and running work items in parallel."""

from concurrent.futures import ThreadPoolExecutor
import warnings

current_verbosity = 0


def set_current_verbosity(new_value):
    """
    Set the verbosity used for the printout statements.

    Should only be called by the parameters file, not by the user directly!

    Parameters
    ----------
    new_value : int
        New verbosity.
    """
    global current_verbosity
    current_verbosity = new_value


def get_current_verbosity():
    """Return the verbosity currently used for printout statements."""
    return current_verbosity


def printout(*values, sep=" ", min_verbosity=0):
    """
    Interface to built-in "print". Can be used like print.

    Linked to the verbosity option in parameters. By default, all messages are
    treated as high level messages and will be printed.

    Parameters
    ----------
    values : object
        Values to be printed.

    sep : string
        Separator between printed values.

    min_verbosity : int
        Minimum number of verbosity for this output to still be printed.
    """
    if current_verbosity >= min_verbosity:
        outstring = sep.join([str(v) for v in values])
        print(outstring)


def parallel_warn(warning, min_verbosity=0, category=UserWarning):
    """
    Interface for warnings. Can be used like warnings.warn.

    Linked to the verbosity option in parameters. By default, all messages are
    treated as high level messages and will be printed.

    Parameters
    ----------
    warning : str
        Warning to be printed.
    min_verbosity : int
        Minimum number of verbosity for this output to still be printed.

    category : class
        Category of the warning to be thrown.
    """
    if current_verbosity >= min_verbosity:
        warnings.warn(warning, category=category)


def parallel_map(function, items, workers=1):
    """
    Apply a function to every item, optionally on a pool of threads.

    Results are returned in the order of the items, regardless of the order
    in which workers finish, so that outputs stay byte-identical between
    serial and parallel runs.

    Parameters
    ----------
    function : callable
        Function applied to each item.

    items : iterable
        Work items.

    workers : int
        Number of worker threads. 1 (default) runs serially.

    Returns
    -------
    results : list
        function(item) for every item, in item order.
    """
    items = list(items)
    if workers is None or workers <= 1 or len(items) <= 1:
        return [function(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(function, items))
