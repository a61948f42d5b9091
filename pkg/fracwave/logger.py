import logging


logger = logging.getLogger('fracwave')
if not logger.handlers:
    _handler = logging.StreamHandler()
    _handler.setFormatter(logging.Formatter('%(message)s'))
    logger.addHandler(_handler)
    logger.setLevel(logging.INFO)
    logger.propagate = False


def debug(msg, level=0, silent=False):
    if not silent:
        logger.debug('\t'*level + msg)
    return msg

def warn(msg, level=0, silent=False):
    msg = 'WARNING: ' + msg
    if not silent:
        logger.warning('\t'*level + msg)
    return msg

def error(msg, level=0, silent=False):
    msg = 'ERROR: ' + msg
    if not silent:
        logger.error('\t'*level + msg)
    return msg

def msg(msg, level=0, silent=False):
    if not silent:
        logger.info('\t'*level + msg)
    return msg

def set_quiet(quiet=True):
    """Let only critical records through the package logger"""
    logger.setLevel(logging.CRITICAL if quiet else logging.INFO)
