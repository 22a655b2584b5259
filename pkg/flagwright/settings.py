'''
Run configuration shared across the package.

Values here are defaults; constructors and the command line override them.
'''
import logging
import os

log = logging.getLogger(__name__)

# Largest cyclotomic order tried when guarding a specialization q=t
CYCLOTOMIC_BOUND = int(os.environ.get('FLAGWRIGHT_CYCLOTOMIC_BOUND', 64))

# Sample monomials use exponents in [-SAMPLE_EXPONENT_BOUND, SAMPLE_EXPONENT_BOUND]
SAMPLE_EXPONENT_BOUND = 2

DEFAULT_WINDOW = 2
DEFAULT_SAMPLES = 8
DEFAULT_SEED = 0

THREADS_ENV = 'QA_THREADS'


def thread_cap(default=1):
    '''
    Reads the parallelism cap from the environment.

    Args:
        default: Returned when the variable is unset or unusable.
    '''
    raw = os.environ.get(THREADS_ENV)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        log.warning("Ignoring %s=%r: not an integer", THREADS_ENV, raw)
        return default
    if value < 1:
        log.warning("Ignoring %s=%r: must be positive", THREADS_ENV, raw)
        return default
    return value
