import logging

log = logging.getLogger("polysym")
