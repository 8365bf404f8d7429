"""
Subcommand handlers.

Each handler takes the parsed arguments and the engine config and returns
(Report, exit code). Errors propagate to cli.main, which maps them onto
exit codes.
"""
import logging
from pathlib import Path
from typing import List, Tuple

from toric_mori.cli.report import Report, digest_files
from toric_mori.config.loader import EngineConfig
from toric_mori.contract import (
    ContractionKind, MMPRunner, StepOutcome, birational_contraction, classify, fano_contraction,
    flip, trichotomy,
)
from toric_mori.errors import InputError
from toric_mori.fan import (
    FanError, FanMorphism, MorphismIncompatibleError, check_morphism, enumerate_walls,
    is_complete, is_smooth, picard_number, primitive_collections, validate_fan, verify_proper,
)
from toric_mori.io import load_divisor, load_fan, load_morphism, write_fan
from toric_mori.mori import (
    extremal_primitive_relation, get_extremal_ray, mori_cone_analysis, recognize_wps,
    relative_picard_number, verify_extremal_structure, verify_primitive_closure,
)
from toric_mori.positivity import TorusDivisor
from toric_mori.positivity.criteria import (
    Positivity, TwistVerdict, find_relatively_ample_divisor, mustata_one_divisor,
    mustata_two_divisor, relative_positivity, twist_free_bound,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2


def _report(args, paths, result, diagnostics=None) -> Report:
    return Report(
        command=list(args.command_echo),
        inputs_digest=digest_files(paths),
        result=result,
        diagnostics=list(diagnostics or []),
    )


def _prepare_morphism(args, diagnostics: List[str]) -> FanMorphism:
    """Load a morphism and check both fans, compatibility and properness."""
    m = load_morphism(args.morphism)
    for name, fan in (("source", m.source), ("target", m.target)):
        report = validate_fan(fan)
        if not report.ok:
            raise FanError(f"{name} fan is invalid: " + "; ".join(report.violations))

    compatibility = check_morphism(m)
    if not compatibility.ok:
        raise MorphismIncompatibleError("morphism incompatible: " + "; ".join(compatibility.violations))

    proper = verify_proper(m)
    if proper is False:
        raise MorphismIncompatibleError("morphism is not proper")
    if proper is None:
        if not args.assume_proper:
            raise InputError("properness of this morphism cannot be verified; pass --assume-proper")
        logger.warning("properness assumed, not verified")
        diagnostics.append("properness assumed, not verified")
    return m


def _ray_label(index: int) -> str:
    return f"ray {index}"


def cmd_validate(args, config: EngineConfig) -> Tuple[Report, int]:
    fan = load_fan(args.fan)
    report = validate_fan(fan)
    summary = ["valid fan"] if report.ok else [f"invalid fan: {len(report.violations)} violations"]
    result = {"valid": report.ok, "violations": report.violations, "summary": summary}
    return _report(args, [args.fan], result, report.violations), EXIT_OK if report.ok else EXIT_INVALID


def cmd_info(args, config: EngineConfig) -> Tuple[Report, int]:
    fan = load_fan(args.fan)
    report = validate_fan(fan)
    if not report.ok:
        result = {"valid": False, "summary": ["invalid fan"]}
        return _report(args, [args.fan], result, report.violations), EXIT_INVALID

    result = fan.to_dict()
    result["simplicial"] = fan.simplicial
    result["smooth"] = is_smooth(fan)
    try:
        result["walls"] = [w.to_dict() for w in enumerate_walls(fan)]
    except FanError as e:
        logger.debug(f"no walls: {e}")
        result["walls"] = None

    complete = fan.simplicial and is_complete(fan)
    result["complete"] = complete if fan.simplicial else None
    result["primitive_collections"] = None
    result["picard_number"] = None
    result["wps_weights"] = None
    if fan.simplicial:
        collections = primitive_collections(fan, config.engine.max_primitive_collection_rays)
        result["primitive_collections"] = [list(c) for c in collections]
        result["wps_weights"] = None if (wps := recognize_wps(fan)) is None else list(wps)
    if complete:
        result["picard_number"] = picard_number(fan)

    summary = [
        f"rank {fan.rank}, {len(fan.rays)} rays, {len(fan.max_cones)} maximal cones",
        f"simplicial: {fan.simplicial}, smooth: {result['smooth']}, complete: {result['complete']}",
    ]
    if result["picard_number"] is not None:
        summary.append(f"picard number: {result['picard_number']}")
    if result["wps_weights"] is not None:
        summary.append(f"weighted projective space P({','.join(str(a) for a in result['wps_weights'])})")
    result["summary"] = summary
    return _report(args, [args.fan], result), EXIT_OK


def cmd_mori(args, config: EngineConfig) -> Tuple[Report, int]:
    diagnostics: List[str] = []
    m = _prepare_morphism(args, diagnostics)
    analysis = mori_cone_analysis(m)
    complete = is_complete(m.source)

    rays = []
    summary = [f"{len(analysis.extremal)} extremal rays"]
    for ray in analysis.extremal:
        epr = extremal_primitive_relation(m, ray)
        kind = classify(epr)
        entry = ray.to_dict()
        entry.update({"relation": epr.text, "kind": kind.value, "degree": epr.degree})
        line = f"{_ray_label(ray.index)}: {kind.value}, {epr.text}"
        if kind == ContractionKind.SMALL:
            entry["trichotomy"] = trichotomy(epr).value
            line += f", {entry['trichotomy']}"
        rays.append(entry)
        summary.append(line)

        checks = verify_extremal_structure(m.source, epr)
        if complete:
            checks.extend(verify_primitive_closure(m.source, epr))
        diagnostics.extend(f"{_ray_label(ray.index)}: {v}" for v in checks.violations)

    rho = relative_picard_number(m)
    summary.append(f"relative picard number: {rho}")
    certificate = find_relatively_ample_divisor(
        m, config.engine.ample_search_bound, config.engine.ample_search_max_rays,
    )
    if certificate is None:
        diagnostics.append("no relatively ample divisor found within the search bound")

    result = {
        "contracted_walls": [
            {"wall": list(wall.face), "class": cls.to_dict()} for wall, cls in analysis.classes
        ],
        "extremal_rays": rays,
        "rejected": [r.to_dict() for r in analysis.rejected],
        "relative_picard_number": rho,
        "ample_certificate": None if certificate is None else certificate.to_dict(),
        "summary": summary,
    }
    return _report(args, [args.morphism], result, diagnostics), EXIT_OK


def cmd_contract(args, config: EngineConfig) -> Tuple[Report, int]:
    diagnostics: List[str] = []
    m = _prepare_morphism(args, diagnostics)
    epr = extremal_primitive_relation(m, get_extremal_ray(m, args.ray))
    if classify(epr) == ContractionKind.FANO:
        result = fano_contraction(m, epr)
    else:
        result = birational_contraction(m, epr)

    if args.out:
        extra = None
        if result.quotient is not None:
            extra = {"quotient_matrix": [list(r) for r in result.quotient.to_rows()]}
        write_fan(result.target_fan, args.out, indent=config.output.json_indent, extra=extra)

    payload = result.to_dict()
    payload["summary"] = result.describe()
    return _report(args, [args.morphism], payload, diagnostics), EXIT_OK


def cmd_flip(args, config: EngineConfig) -> Tuple[Report, int]:
    diagnostics: List[str] = []
    m = _prepare_morphism(args, diagnostics)
    epr = extremal_primitive_relation(m, get_extremal_ray(m, args.ray))
    result = flip(m, epr)
    if args.out:
        write_fan(result.flip_fan, args.out, indent=config.output.json_indent)

    payload = result.to_dict()
    payload["summary"] = result.describe()
    return _report(args, [args.morphism], payload, diagnostics), EXIT_OK


def _check_ray(index: int, num_rays: int) -> int:
    if not 0 <= index < num_rays:
        raise InputError(f"ray r{index} out of range (fan has {num_rays} rays)")
    return index


def _direct_note(verdict: TwistVerdict, witness) -> str:
    text = {
        TwistVerdict.FREE: "f-free",
        TwistVerdict.NOT_FREE: "not f-free",
        TwistVerdict.AMPLE: "ample",
        TwistVerdict.NOT_AMPLE: "not f-ample",
    }[verdict]
    if witness is not None:
        text += f"; witness: {_ray_label(witness)}"
    return text + "; direct check agrees"


def cmd_positivity(args, config: EngineConfig) -> Tuple[Report, int]:
    diagnostics: List[str] = []
    m = _prepare_morphism(args, diagnostics)
    num_rays = len(m.source.rays)
    divisor = load_divisor(args.divisor, num_rays)
    paths = [args.morphism, args.divisor]

    if args.check:
        outcome = relative_positivity(m, divisor)
        result = outcome.to_dict()
        if args.check == "nef":
            holds = outcome.nef
        elif args.check == "ample":
            holds = outcome.verdict == Positivity.AMPLE
        else:
            holds = outcome.free
            if holds is None:
                diagnostics.append("freeness is decided only for integral Cartier divisors")
        line = f"{args.check}: {'unknown' if holds is None else ('yes' if holds else 'no')}"
        if outcome.witness is not None:
            line += f"; witness wall {list(outcome.witness.face)}"
        result.update({"check": args.check, "holds": holds, "summary": [line]})

    elif args.twist_free:
        rays = [_check_ray(v, num_rays) for v in args.twist_free]
        if len(rays) == 2:
            outcome = mustata_two_divisor(m, divisor, rays[0], rays[1])
            result = outcome.to_dict()
            result["summary"] = [_direct_note(outcome.verdict, outcome.witness_ray)]
        elif len(rays) == 1:
            bound = twist_free_bound(m, divisor, 1)
            twisted = divisor - TorusDivisor.prime(num_rays, rays[0])
            direct = relative_positivity(m, twisted)
            result = {"bound": bound.to_dict(), "direct": direct.to_dict(), "free": direct.free}
            result["summary"] = ["f-free" if direct.free else "not f-free"]
        else:
            raise InputError(f"--twist-free takes one or two rays (got {len(rays)})")

    elif args.twist_ample is not None:
        outcome = mustata_one_divisor(m, divisor, _check_ray(args.twist_ample, num_rays))
        result = outcome.to_dict()
        result["summary"] = [_direct_note(outcome.verdict, outcome.witness_ray)]

    else:
        bound = twist_free_bound(m, divisor, args.twist_bound)
        result = bound.to_dict()
        if not bound.hypothesis_holds:
            result["summary"] = [f"hypothesis fails on {_ray_label(bound.violating_ray)}"]
        else:
            result["summary"] = [f"twist bound {'certified' if bound.certified else 'not certified'}"]

    return _report(args, paths, result, diagnostics), EXIT_OK


def cmd_mmp(args, config: EngineConfig) -> Tuple[Report, int]:
    diagnostics: List[str] = []
    m = _prepare_morphism(args, diagnostics)
    runner = MMPRunner(config)
    steps = runner.run(m, args.ray_choice, out_dir=Path(args.out) if args.out else None)

    summary = []
    for step in steps:
        kind = step.result.kind.value if step.result is not None else "Small"
        summary.append(f"step {step.step}: {_ray_label(step.ray)}, {kind}, {step.reason}")
    if steps and steps[-1].outcome != StepOutcome.CONTINUE:
        final = steps[-1].reason
    else:
        final = "choices exhausted"
    summary.append(final)

    result = {"steps": [s.to_dict() for s in steps], "final": final, "summary": summary}
    return _report(args, [args.morphism], result, diagnostics), EXIT_OK
