"""Coprime labelings: constructions, verification and an exact solver."""
import json

try:
    from . import _coprime as _core
except ImportError:  # in-tree build, extension found on PYTHONPATH
    import _coprime as _core

CoprimeError = _core.CoprimeError
ParameterOutOfRange = _core.ParameterOutOfRange
HypothesisViolated = _core.HypothesisViolated
ConstructionUnavailable = _core.ConstructionUnavailable
BudgetExceeded = _core.BudgetExceeded
InfeasibleAtCap = _core.InfeasibleAtCap
MissingVertex = _core.MissingVertex

Graph = _core.Graph
gcd = _core.gcd
is_prime = _core.is_prime
find_s = _core.find_s
prime_factors = _core.prime_factors
graph = _core.graph
gp = _core.gp
construct = _core.construct
expected_max_label = _core.expected_max_label
verify = _core.verify
solve = _core.solve
lower_bound = _core.lower_bound
independence_number = _core.independence_number
confirm_no_prime_labeling = _core.confirm_no_prime_labeling


def scan(family, lo, hi, allow_fallback=True, workers=0):
    """One dict per instance, in parameter order."""
    return [json.loads(s) for s in _core.scan_json(family, lo, hi, allow_fallback, workers)]


def load(text):
    """Parse a labeling document; returns (graph, labels)."""
    if not isinstance(text, str):
        text = json.dumps(text)
    return _core.load_json(text)
