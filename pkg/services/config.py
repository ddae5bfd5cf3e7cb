import os

import dotenv

dotenv.load_dotenv()


class Limits:
    maxN: int = int(os.getenv("maxN", "12"))
    maxChains: int = int(os.getenv("maxChains", "10"))
    gridDenom: int = int(os.getenv("gridDenom", "2"))
    reesTerms: int = int(os.getenv("reesTerms", "2"))
