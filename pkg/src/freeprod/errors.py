class FreeProdError(Exception):
    """Base class for domain errors; the CLI maps these to exit status 1."""


class MixedContexts(FreeProdError):
    def __init__(self):
        super().__init__("words belong to different free products")
