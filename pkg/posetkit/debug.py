import os
import logging

logger = logging.getLogger('posetkit')
logger.propagate = False

if os.getenv('DEBUG'):
    handler = logging.FileHandler(os.getenv('POSETKIT_LOG', 'log.txt'), mode='w')
    handler.setFormatter(logging.Formatter('%(asctime)s %(module)s: %(message)s'))
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG)
else:
    logger.addHandler(logging.NullHandler())


def log(*args):
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug(' '.join(str(_) for _ in args), stacklevel=2)
