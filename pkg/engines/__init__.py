from engines.base import CritEngine
from engines.embedding_engine import EmbeddingEngine, crit_embedding
from engines.inequality_engine import InequalityEngine, crit_inequality
from engines.weil_engine import WeilEngine, crit_gamma

# Engine names accepted by the command line, in reporting order
ENGINES = {
    "gamma": WeilEngine(),
    "inequality": InequalityEngine(),
    "embedding": EmbeddingEngine(),
}

__all__ = [
    "CritEngine",
    "EmbeddingEngine",
    "ENGINES",
    "InequalityEngine",
    "WeilEngine",
    "crit_embedding",
    "crit_gamma",
    "crit_inequality",
]
