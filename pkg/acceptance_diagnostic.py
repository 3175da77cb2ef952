import logging
import sys
import time
import traceback
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

import numpy as np
from colorama import Fore, Style, init

import log_config
from branching import branch_enumerate, pipeline_tate_support, weyl_dim
from crosscheck import compare_engines, fuzz_campaign
from engines import ENGINES
from engines.embedding_engine import crit_embedding, splitting_equivalence_holds
from engines.inequality_engine import witness_diagnostic
from log_config import get_logger
from models import Agreement, GenConfig, HalfInt, LanglandsParam

# Initialize colorama
init(autoreset=True)

logger = get_logger("acceptance_diagnostic")
log_config.configure(logging.INFO)

FIXTURES = {
    "shimura": (
        {"n": 2, "w": 4, "l": [3, -3], "delta": 0},
        {"n": 1, "w": 0, "l": [0], "delta": 0},
        ["3/2", "5/2", "7/2"],
    ),
    "rankin": (
        {"n": 2, "w": 6, "l": [5, -5], "delta": 0},
        {"n": 2, "w": 4, "l": [3, -3], "delta": 0},
        ["5", "6"],
    ),
    "gelbart_jacquet": (
        {"n": 3, "w": 0, "l": [6, 0, -6], "delta": 1},
        {"n": 1, "w": 0, "l": [0], "delta": 0},
        ["-2", "0", "1", "3"],
    ),
    "gelbart_jacquet_twisted": (
        {"n": 3, "w": 0, "l": [6, 0, -6], "delta": 1},
        {"mu": [-1], "delta": 1},
        ["-2", "1"],
    ),
    "codimension_one": (
        {"n": 3, "w": 0, "l": [6, 0, -6], "delta": 0},
        {"mu": [1, -1], "delta": 0},
        ["-1/2", "1/2", "3/2"],
    ),
}

# Warnings whose message starts with this prefix come from the t0 diagnostic
WITNESS_WARNING = "Witness t0"


@dataclass
class CheckResult:
    name: str
    passed: bool
    message: str = ""
    seconds: float = 0.0
    expected_warnings: int = 0


check_results: List[CheckResult] = []


class WarningCollector(logging.Handler):
    """
    Collects WARNING+ records during one check, setting aside those whose
    message starts with one of the expected prefixes.
    """

    def __init__(self, expected: Sequence[str] = ()):
        super().__init__(level=logging.WARNING)
        self.expected = tuple(expected)
        self.expected_count = 0
        self.unexpected: List[logging.LogRecord] = []

    def emit(self, record):
        if record.getMessage().startswith(self.expected):
            self.expected_count += 1
        else:
            self.unexpected.append(record)


def run_check(name: str, func: Callable[[], Tuple[bool, str]], expected_warnings: Sequence[str] = ()) -> CheckResult:
    """
    Run one acceptance check and record its result.
    :param name: Label used in the summary
    :param func: Returns (passed, message)
    :param expected_warnings: Message prefixes of warnings the check is allowed to log
    :return: The recorded result; any other warning fails the check
    """
    logger.info(f"{Fore.CYAN}{Style.BRIGHT}===== Check: {name} ====={Style.RESET_ALL}")
    collector = WarningCollector(expected_warnings)
    root_logger = logging.getLogger()
    root_logger.addHandler(collector)

    started = time.perf_counter()
    try:
        passed, message = func()
    except Exception as e:
        passed, message = False, f"{type(e).__name__}: {e}"
        logger.debug(traceback.format_exc())
    finally:
        root_logger.removeHandler(collector)

    if collector.unexpected:
        passed = False
        logged = [f"{record.levelname}: {record.getMessage()}" for record in collector.unexpected]
        message = "; ".join([message] + logged if message else logged)

    result = CheckResult(name, passed, message, time.perf_counter() - started, collector.expected_count)
    check_results.append(result)
    if result.passed:
        logger.info(f"✅ {name} passed in {result.seconds:.2f}s ({result.expected_warnings} expected warnings).")
    else:
        logger.error(f"❌ {name} failed: {result.message}")
    return result


def summarize(results: Sequence[CheckResult]) -> int:
    """Log the colored summary and return the process exit status."""
    failed = [result for result in results if not result.passed]
    logger.info(
        f"{Fore.GREEN}{Style.BRIGHT}Acceptance run: {len(results)} checks. "
        f"Passed: {len(results) - len(failed)}. Failed: {len(failed)}{Style.RESET_ALL}"
    )
    if not failed:
        return 0
    logger.error(f"{Fore.RED}{Style.BRIGHT}Failed checks:{Style.RESET_ALL}")
    for result in failed:
        logger.error(f" - {result.name}: {result.message}")
    return 1


def load_fixture(name: str):
    pi_info, sigma_info, expected = FIXTURES[name]
    return LanglandsParam.from_info(pi_info), LanglandsParam.from_info(sigma_info), expected


def check_fixture(name: str):
    pi, sigma, expected = load_fixture(name)
    outcome = compare_engines(pi, sigma)
    if not isinstance(outcome, Agreement):
        return False, f"engines disagree: {outcome.to_dict()['engines']}"
    if outcome.crit.to_strings() != expected:
        return False, f"Crit = {outcome.crit.to_strings()}, expected {expected}"
    return True, ""


def check_shimura_interval():
    pi, sigma, _ = load_fixture("shimura")
    _, trace = crit_embedding(pi, sigma)
    intervals = [interval.to_list() for interval in trace.emb_intervals]
    if intervals != [[1, 3], [1, 3]]:
        return False, f"Emb intervals {intervals}, expected [1, 3]"
    if trace.t_shift != HalfInt.half(-1):
        return False, f"t = s - {trace.t_shift}, expected t = s + 1/2"
    return True, ""


def check_rankin_trace():
    pi, sigma, _ = load_fixture("rankin")
    _, trace = crit_embedding(pi, sigma)
    seen = (trace.d, trace.mu_tilde, trace.lambda_tilde)
    if seen != (3, (2, 1), (3, 3)):
        return False, f"(d, mu_tilde, lambda_tilde) = {seen}, expected (3, (2, 1), (3, 3))"
    return True, ""


def check_codimension_one_trace():
    pi, sigma, _ = load_fixture("codimension_one")
    crit, trace = crit_embedding(pi, sigma)
    nu = sigma.to_weight().entries
    if trace.lambda_ != nu or trace.d != 0:
        return False, f"lambda = {trace.lambda_}, d = {trace.d}, expected lambda = nu = {nu} and d = 0"
    for which in (1, 2):
        if trace.theta_images[f"theta_{which}"] != trace.mu_check:
            return False, f"theta_{which}(u_hat) = {trace.theta_images[f'theta_{which}']}, expected {trace.mu_check}"
        if trace.theta_images[f"theta_prime_{which}"] != nu:
            return False, f"theta'_{which}(lambda_tilde) = {trace.theta_images[f'theta_prime_{which}']}, expected {nu}"
    shifted = [str(HalfInt.of(s) - trace.t_shift) for s in trace.emb_intervals[0]]
    if trace.t_shift != HalfInt.half(-1) or shifted != crit.to_strings():
        return False, f"Crit {crit.to_strings()} is not Emb shifted by 1/2"
    return True, ""


def check_differential_campaign():
    cfg = GenConfig(n_range=(1, 6), m_range=(1, 6), l_bound=40, trials=10_000, seed=42, boundary_bias=0.2)
    summary = fuzz_campaign(cfg)
    if summary["mismatches"] or summary["structural_failures"]:
        return False, f"{summary['mismatches']} mismatches, {summary['structural_failures']} structural failures"
    return True, ""


def _random_dominant(rng: np.random.Generator, rank: int, low: int, high: int) -> tuple:
    return tuple(sorted((int(x) for x in rng.integers(low, high + 1, size=rank)), reverse=True))


def _random_pure(rng: np.random.Generator, r: int, low: int, high: int, defect_zero: bool) -> tuple:
    top = _random_dominant(rng, r, low, high)
    # y_i + y_{2r+1-i} = c; c = 2 y_r gives y_{r+1} = y_r
    c = 2 * top[-1] - (0 if defect_zero else int(rng.integers(0, 7)))
    return top + tuple(c - x for x in reversed(top))


def check_splitting_oracle():
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(41)))
    for _ in range(1000):
        r = int(rng.integers(1, 5))
        y = _random_pure(rng, r, -8, 8, defect_zero=True)
        z = _random_pure(rng, r, -8, 8, defect_zero=False)
        if not splitting_equivalence_holds(y, z):
            return False, f"disagreement for y={y} z={z}"
    return True, ""


def check_branching_sum():
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(43)))
    for _ in range(200):
        rank = int(rng.integers(2, 6))
        top = int(rng.integers(-3, 4))
        alpha = _random_dominant(rng, rank, top - 6, top)
        total = sum(weyl_dim(beta) for beta in branch_enumerate(alpha))
        if total != weyl_dim(alpha):
            return False, f"alpha={alpha}: {total} != {weyl_dim(alpha)}"
    return True, ""


def check_tate_support():
    for name in ("shimura", "rankin", "gelbart_jacquet"):
        pi, sigma, _ = load_fixture(name)
        crit, trace = crit_embedding(pi, sigma)
        big, small = (sigma, pi) if trace.normalized else (pi, sigma)
        support = pipeline_tate_support(trace, big.n, small.n, big.w, small.w)
        shift = HalfInt.half(big.n - small.n) - 1
        expected = tuple(int(t + shift) for t in crit)
        if support != expected:
            return False, f"{name}: Tate support {support}, expected {expected}"
    return True, ""


def check_witness_flag():
    pi, sigma, _ = load_fixture("rankin")
    diagnostic = witness_diagnostic(pi, sigma)
    if str(diagnostic.t0) != "11/2" or not diagnostic.fires:
        return False, f"t0 = {diagnostic.t0}, fires = {diagnostic.fires}"
    return True, ""


def check_engine_registry():
    names = sorted(ENGINES)
    if names != ["embedding", "gamma", "inequality"]:
        return False, f"unexpected engines {names}"
    return True, ""


def main():
    run_check("Engine registry", check_engine_registry)
    for name in FIXTURES:
        run_check(f"Fixture {name}", lambda name=name: check_fixture(name))
    run_check("Shimura Emb interval", check_shimura_interval)
    run_check("Rankin trace", check_rankin_trace)
    run_check("Codimension-one trace", check_codimension_one_trace)
    run_check("Differential campaign", check_differential_campaign, expected_warnings=(WITNESS_WARNING,))
    run_check("Splitting-map oracle", check_splitting_oracle)
    run_check("Branching dimension sum", check_branching_sum)
    run_check("Tate support", check_tate_support)
    run_check("Witness diagnostic flag", check_witness_flag, expected_warnings=(WITNESS_WARNING,))
    sys.exit(summarize(check_results))


if __name__ == "__main__":
    main()
