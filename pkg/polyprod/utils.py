"""
Configuration and shared exceptions

"""
import logging
import os
import threading

LOGGER = logging.getLogger(__name__)

DEFAULT_SEARCH_CAP = int(os.environ.get('POLYPROD_SEARCH_CAP', 32))
DEFAULT_CANONICAL_BUDGET = int(os.environ.get('POLYPROD_CANONICAL_BUDGET',
                                              200000))
DEFAULT_AUTOMORPHISM_LIMIT = int(os.environ.get('POLYPROD_AUTOMORPHISM_LIMIT',
                                                200000))
DEFAULT_EMBEDDING_LIMIT = int(os.environ.get('POLYPROD_EMBEDDING_LIMIT', 64))


class _Settings(object):
    """Process-wide search limits, initialized from the environment"""
    _lock = threading.Lock()
    search_cap = DEFAULT_SEARCH_CAP


def search_cap():
    """Return the active vertex cap for exhaustive searches.

    :rtype: int

    """
    return _Settings.search_cap


def set_search_cap(value):
    """Override the vertex cap for exhaustive searches in this process.

    :param int value: The new cap
    :raises: ValueError

    """
    value = int(value)
    if value < 1:
        raise ValueError('Search cap must be positive, got %s' % value)
    with _Settings._lock:
        LOGGER.debug('Search cap changed from %s to %s',
                     _Settings.search_cap, value)
        _Settings.search_cap = value


def resolve_cap(cap):
    """Return `cap` when given, otherwise the process-wide search cap.

    :param int cap: An explicit cap or None
    :rtype: int

    """
    return search_cap() if cap is None else cap


def ensure_within_cap(n, cap, what):
    """Raise :exc:`SearchBudgetExceeded` if a search over `n` vertices would
    exceed the cap.

    :param int n: The vertex count of the search input
    :param int cap: An explicit cap or None for the process-wide one
    :param str what: The name of the search, for the error message
    :raises: SearchBudgetExceeded

    """
    cap = resolve_cap(cap)
    if n > cap:
        raise SearchBudgetExceeded(cap, '%s on %s vertices' % (what, n))


class PolyprodException(Exception):
    pass


class SearchBudgetExceeded(PolyprodException):
    """Raised when an exhaustive search would go past its configured limit"""
    def __init__(self, limit, what):
        super(SearchBudgetExceeded, self).__init__()
        self.limit = limit
        self.what = what

    def __str__(self):
        return 'Search budget %s exceeded by %s' % (self.limit, self.what)
