"""Command-line front end: build the geometries, verify files, and run the
whole battery of checks as reproducible batch reports.

Every command prints one key-sorted JSON document to stdout (timing goes to
stderr so identical invocations stay byte-identical).  Exit codes: 0 pass,
1 verification or claim failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from fractions import Fraction

from . import __version__
from . import construction as con
from . import gf3space as gf3
from .bits import bits, mask_of
from .cliques import classify_line_cliques, match_negative_lines, max_cliques
from .geometric_search import (
    all_geometries_on,
    count_nonnegative_lines,
    mms_counterexample_search,
    star_weighting,
)
from .graphs import SrgViolation, local_configuration, srg_check
from .incidence import (
    IncidenceStructure,
    PgViolation,
    dual,
    line_graph,
    point_graph,
    read_incidence,
    verify_pg,
    write_incidence,
)
from .symmetry import (
    PermutationGroup,
    aut_graph,
    aut_incidence,
    canonical_form,
    colored_incidence_graph,
    is_isomorphic,
    is_self_dual,
    relabel_incidence,
    translation_check,
)


def _encode_json(obj):
    if isinstance(obj, Fraction):
        return [obj.numerator, obj.denominator]
    raise TypeError(f"not JSON serializable: {obj!r}")


def _emit(command: str, inputs: dict, results: dict) -> None:
    doc = {
        "command": command,
        "inputs": inputs,
        "results": results,
        "version": __version__,
    }
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2, default=_encode_json) + "\n")


def _load(path: str) -> IncidenceStructure:
    try:
        return read_incidence(path)
    except OSError as e:
        print(f"error: cannot read {path}: {e}", file=sys.stderr)
        raise SystemExit(2)
    except ValueError as e:
        print(f"error: bad incidence file {path}: {e}", file=sys.stderr)
        raise SystemExit(2)


def _geometry(name: str) -> IncidenceStructure:
    return con.build_vls() if name == "vls" else con.build_new()


def _srg_json(g) -> dict:
    p = srg_check(g)
    return {
        "v": p.v,
        "k": p.k,
        "lambda": p.lam,
        "mu": p.mu,
        "complete": p.complete,
        "empty": p.empty,
    }


# ---------------------------------------------------------------------------
# subcommands


def _cmd_build(args) -> int:
    g = _geometry(args.geometry)
    try:
        write_incidence(g, args.out)
    except OSError as e:
        print(f"error: cannot write {args.out}: {e}", file=sys.stderr)
        return 2
    _emit("build", {"geometry": args.geometry, "out": args.out},
          {"v": g.v, "b": g.b})
    return 0


def _cmd_verify(args) -> int:
    g = _load(args.file)
    results: dict = {}
    ok = True
    try:
        params = verify_pg(g)
        results["pg"] = list(params.as_tuple())
    except PgViolation as e:
        results["pg"] = None
        results["pg_error"] = {"reason": e.reason, "witness": e.witness}
        ok = False
    if ok:
        try:
            results["srg_point"] = _srg_json(point_graph(g))
            results["srg_line"] = _srg_json(line_graph(g))
        except SrgViolation as e:
            results["srg_error"] = {"reason": e.reason, "pair": e.pair, "count": e.count}
            ok = False
    if ok and args.expect:
        try:
            s, t, alpha = (int(x) for x in args.expect.split(","))
        except ValueError:
            print("error: --expect wants s,t,alpha", file=sys.stderr)
            return 2
        results["expect"] = [s, t, alpha]
        if (params.s, params.t, params.alpha) != (s, t, alpha):
            results["expect_match"] = False
            ok = False
        else:
            results["expect_match"] = True
    results["pass"] = ok
    _emit("verify", {"file": args.file, "expect": args.expect}, results)
    return 0 if ok else 1


def _cmd_srg(args) -> int:
    g = _load(args.file)
    graph = point_graph(g) if args.graph == "point" else line_graph(g)
    try:
        results = _srg_json(graph)
    except SrgViolation as e:
        _emit("srg", {"file": args.file, "graph": args.graph},
              {"error": e.reason, "pair": list(e.pair) if e.pair else None,
               "count": e.count})
        return 1
    _emit("srg", {"file": args.file, "graph": args.graph}, results)
    return 0


def _cmd_local(args) -> int:
    g = _load(args.file)
    try:
        cfg = local_configuration(g, args.x, args.y)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    _emit(
        "local",
        {"file": args.file, "x": args.x, "y": args.y},
        {
            "a": sorted(bits(cfg.a_mask)),
            "b": sorted(bits(cfg.b_mask)),
            "z": cfg.z,
            "edges": sorted(sorted(e) for e in cfg.edge_list),
            "edge_count": cfg.induced.edge_count(),
        },
    )
    return 0


def _cmd_cliques(args) -> int:
    g = _load(args.file)
    graph = point_graph(g) if args.graph == "point" else line_graph(g)
    rep = max_cliques(graph)
    results: dict = {
        "histogram": {str(k): v for k, v in sorted(rep.size_histogram.items())},
        "count_size_6": len(rep.cliques_of_size_6),
    }
    if args.graph == "line":
        stars, non_stars = classify_line_cliques(g, rep.cliques_of_size_6)
        results["stars"] = len(stars)
        results["non_stars"] = len(non_stars)
    if args.list:
        results["cliques_size_6"] = [sorted(bits(m)) for m in rep.cliques_of_size_6]
    _emit("cliques", {"file": args.file, "graph": args.graph, "list": args.list},
          results)
    return 0


def _cmd_aut(args) -> int:
    g = _load(args.file)
    group = aut_incidence(g, on=args.on)
    orbs = group.orbits()
    _emit(
        "aut",
        {"file": args.file, "on": args.on},
        {
            "order": group.order(),
            "orbit_sizes": sorted(len(o) for o in orbs),
            "orbits": orbs,
            "transitive": group.is_transitive(),
            "generators": [list(p) for p in group.generators],
        },
    )
    return 0


def _cmd_iso(args) -> int:
    g1, g2 = _load(args.file1), _load(args.file2)
    _emit("iso", {"file1": args.file1, "file2": args.file2},
          {"isomorphic": is_isomorphic(g1, g2)})
    return 0


def _cmd_dual(args) -> int:
    g = _load(args.file)
    sd, witness = is_self_dual(g)
    if args.out:
        try:
            write_incidence(dual(g), args.out)
        except OSError as e:
            print(f"error: cannot write {args.out}: {e}", file=sys.stderr)
            return 2
    _emit(
        "dual",
        {"file": args.file, "out": args.out},
        {"self_dual": sd, "witness": list(witness) if witness else None},
    )
    return 0


def _cmd_cover(args) -> int:
    g = _load(args.file)
    graph = point_graph(g)
    solutions = all_geometries_on(graph)
    classes: list[IncidenceStructure] = []
    for s in solutions:
        if not any(is_isomorphic(s, rep) for rep in classes):
            classes.append(s)
    _emit(
        "cover",
        {"file": args.file},
        {
            "solutions": len(solutions),
            "isomorphism_classes": len(classes),
            "contains_input_lines": any(s.lines == g.lines for s in solutions),
            "all_isomorphic_to_input": all(is_isomorphic(s, g) for s in solutions),
        },
    )
    return 0


def _cmd_mms(args) -> int:
    g = _load(args.file)
    rep = max_cliques(line_graph(g))
    stars, non_stars = classify_line_cliques(g, rep.cliques_of_size_6)
    if not 0 <= args.clique < len(non_stars):
        print(f"error: clique index out of range 0..{len(non_stars) - 1}",
              file=sys.stderr)
        return 2
    clique = non_stars[args.clique]
    witness = mms_counterexample_search(g, clique, bound=args.bound)
    inputs = {"file": args.file, "clique": args.clique, "bound": args.bound}
    if witness is None:
        _emit("mms", inputs,
              {"clique_lines": sorted(bits(clique)), "witness": None,
               "note": "search space exhausted; not a refutation"})
        return 0
    count, nonneg = count_nonnegative_lines(g, witness)
    star_masks = {g.pencil_mask(p) for p in range(g.v)}
    _emit(
        "mms",
        inputs,
        {
            "clique_lines": sorted(bits(clique)),
            "witness": {
                "weights": list(witness.weights),
                "nonnegative_count": count,
                "nonnegative_lines": sorted(bits(nonneg)),
                "nonnegative_is_star": nonneg in star_masks,
                "violates_strict_star_property": count <= 6 and nonneg not in star_masks,
                "below_star_size": count < 6,
            },
        },
    )
    return 0


# ---------------------------------------------------------------------------
# report --all: the golden suite, one JSON per claim


def _claim_pg_parameters(env) -> dict:
    want = (5, 5, 2, 81, 81)
    got = {
        "vls": verify_pg(env["G"]).as_tuple(),
        "new": verify_pg(env["Gp"]).as_tuple(),
    }
    return {
        "pass": all(v == want for v in got.values()),
        "expected": list(want),
        "got": {k: list(v) for k, v in got.items()},
    }


def _claim_srg_parameters(env) -> dict:
    want = {"v": 81, "k": 30, "lambda": 9, "mu": 12, "complete": False, "empty": False}
    got = {
        "point_vls": _srg_json(env["P1"]),
        "point_new": _srg_json(env["P1p"]),
        "line_vls": _srg_json(env["L2"]),
        "line_new": _srg_json(env["L2p"]),
    }
    return {"pass": all(v == want for v in got.values()), "got": got}


def _claim_isomorphism_and_duality(env, relabelings: int) -> dict:
    iso = is_isomorphic(env["G"], env["Gp"])
    sd_vls, _ = is_self_dual(env["G"])
    sd_new, _ = is_self_dual(env["Gp"])
    certs = {
        name: canonical_form(colored_incidence_graph(g)).certificate
        for name, g in [("vls", env["G"]), ("new", env["Gp"])]
    }
    rng = random.Random(20210522)
    stable = {"vls": 0, "new": 0}
    for name, g in [("vls", env["G"]), ("new", env["Gp"])]:
        for _ in range(relabelings):
            perm = list(range(g.v))
            rng.shuffle(perm)
            h = relabel_incidence(g, tuple(perm))
            c = canonical_form(colored_incidence_graph(h)).certificate
            if c == certs[name]:
                stable[name] += 1
    return {
        "pass": (not iso) and sd_vls and sd_new
        and all(stable[n] == relabelings for n in stable),
        "isomorphic": iso,
        "self_dual": {"vls": sd_vls, "new": sd_new},
        "relabelings": relabelings,
        "stable_certificates": stable,
    }


def _claim_automorphism_orders(env) -> dict:
    groups = {
        "aut_vls": env["autG"],
        "aut_new": env["autGp"],
        "aut_point_graph_vls": aut_graph(env["P1"]),
        "aut_point_graph_new": aut_graph(env["P1p"]),
    }
    want = {
        "aut_vls": 58320,
        "aut_new": 972,
        "aut_point_graph_vls": 116640,
        "aut_point_graph_new": 972,
    }
    got = {}
    two_base = {}
    for name, grp in groups.items():
        got[name] = grp.order()
        n = grp.degree
        o1 = PermutationGroup(n, grp.generators, base=tuple(range(n))).order()
        o2 = PermutationGroup(n, grp.generators, base=tuple(reversed(range(n)))).order()
        two_base[name] = [o1, o2]
    ok = got == want and all(tb == [want[k]] * 2 for k, tb in two_base.items())
    return {"pass": ok, "expected": want, "got": got, "two_base_orders": two_base}


def _claim_new_geometry_orbits(env) -> dict:
    grp = env["autGp"]
    orbs = grp.orbits()
    orb_masks = sorted(mask_of(o) for o in orbs)
    n0 = con.subspace_n0().members
    n12 = con.coset_n1().members | con.coset_n2().members
    points_ok = orb_masks == sorted([n0, n12])
    line_group = aut_incidence(env["Gp"], on="lines")
    lorbs = line_group.orbits()
    sp = con.special_set_s_prime().members
    sprime_idx = {
        i
        for i, m in enumerate(env["Gp"].lines)
        if m in {gf3.translate_mask(sp, x) for x in bits(con.coset_n1().members)}
    }
    lines_ok = sorted(len(o) for o in lorbs) == [27, 54] and any(
        set(o) == sprime_idx for o in lorbs
    )
    stab = grp.stabilizer_order(0)
    trans = translation_check(env["Gp"], con.subspace_n0())
    return {
        "pass": points_ok and lines_ok and not grp.is_transitive()
        and stab == 36 and trans,
        "point_orbit_sizes": sorted(len(o) for o in orbs),
        "point_orbits_are_n0_and_complement": points_ok,
        "line_orbit_sizes": sorted(len(o) for o in lorbs),
        "line_orbits_match_translate_split": lines_ok,
        "transitive": grp.is_transitive(),
        "no_singer_subgroup": not grp.is_transitive(),
        "no_singer_subgroup_note": "a non-transitive group has no transitive "
        "subgroup, hence no point-regular (Singer) subgroup",
        "point_stabilizer_order": stab,
        "n0_translations_preserve_lines": trans,
    }


def _claim_clique_census(env) -> dict:
    rep_p = max_cliques(env["P1"])
    rep_pp = max_cliques(env["P1p"])
    rep_l = max_cliques(env["L2"])
    rep_lp = max_cliques(env["L2p"])
    stars, non_stars = classify_line_cliques(env["G"], rep_l.cliques_of_size_6)
    stars_p, non_stars_p = classify_line_cliques(env["Gp"], rep_lp.cliques_of_size_6)
    negs = con.negative_lines(env["G"])
    try:
        matching = match_negative_lines(env["G"], non_stars, negs)
        bijection = len(matching) == 81
    except ValueError:
        bijection = False
    ok = (
        len(rep_p.cliques_of_size_6) == 162
        and len(rep_pp.cliques_of_size_6) == 108
        and (len(stars), len(non_stars)) == (81, 81)
        and (len(stars_p), len(non_stars_p)) == (81, 27)
        and bijection
    )
    return {
        "pass": ok,
        "size_6_cliques": {"point_vls": len(rep_p.cliques_of_size_6),
                           "point_new": len(rep_pp.cliques_of_size_6)},
        "line_graph_classification": {
            "vls": {"stars": len(stars), "non_stars": len(non_stars)},
            "new": {"stars": len(stars_p), "non_stars": len(non_stars_p)},
        },
        "negative_line_bijection": bijection,
    }


def _claim_subspace_census(env) -> dict:
    subs = gf3.enumerate_subspaces(3)
    s = con.special_set_s().members
    sizes = {}
    for sub in subs:
        c = gf3.intersect_count(sub.members, s)
        sizes[c] = sizes.get(c, 0) + 1
    ovoids = con.find_2_ovoids(env["G"])
    two_subs = sorted(sub.members for sub in subs if gf3.intersect_count(sub.members, s) == 2)
    profile = con.secant_profile(env["G"], con.subspace_n0().members)
    ok = (
        len(subs) == 40
        and set(sizes) == {1, 2, 3, 4}
        and sorted(ovoids) == two_subs
        and profile == {3: 54, 0: 27}
    )
    return {
        "pass": ok,
        "three_dim_subspaces": len(subs),
        "special_set_intersection_distribution": {str(k): v for k, v in sorted(sizes.items())},
        "two_ovoids": len(ovoids),
        "ovoids_equal_2_intersection_subspaces": sorted(ovoids) == two_subs,
        "n0_secant_profile": {str(k): v for k, v in sorted(profile.items())},
    }


def _claim_difference_set_identities(env) -> dict:
    s = con.special_set_s().members
    sp = con.special_set_s_prime().members
    ds, dsp = gf3.difference_set(s), gf3.difference_set(sp)
    n0 = con.subspace_n0().members
    n1 = con.coset_n1().members
    n2 = con.coset_n2().members
    confined = True
    for x in range(81):
        for y in bits(env["P1"].adj[x] ^ env["P1p"].adj[x]):
            both_n1 = (n1 >> x & 1) and (n1 >> y & 1)
            both_n2 = (n2 >> x & 1) and (n2 >> y & 1)
            if not (both_n1 or both_n2):
                confined = False
    ok = (
        ds & dsp & n0 == 0
        and ds & (n1 | n2) == dsp & (n1 | n2)
        and ds.bit_count() == 30
        and dsp.bit_count() == 30
        and confined
    )
    return {
        "pass": ok,
        "triple_intersection_empty": ds & dsp & n0 == 0,
        "difference_sets_agree_off_n0": ds & (n1 | n2) == dsp & (n1 | n2),
        "difference_set_sizes": [ds.bit_count(), dsp.bit_count()],
        "collinearity_changes_confined_to_n1_n2": confined,
    }


def _claim_local_configuration(env) -> dict:
    e1 = gf3.encode(con.E1)
    cfg = local_configuration(env["G"], 0, e1)
    cfg_p = local_configuration(env["Gp"], 0, e1)
    recurring = True
    for x in range(81):
        for y in bits(env["P1"].adj[x]):
            if y < x:
                continue
            if local_configuration(env["G"], x, y).induced.edge_count() != 12:
                recurring = False
    ok = cfg.induced.edge_count() == 12 and cfg_p.induced.edge_count() == 9 and recurring
    return {
        "pass": ok,
        "edge_count_vls": cfg.induced.edge_count(),
        "edge_count_new": cfg_p.induced.edge_count(),
        "shape_recurs_at_all_collinear_pairs": recurring,
    }


def _claim_exact_cover_geometries(env) -> dict:
    out = {}
    ok = True
    for name, g, graph in [("vls", env["G"], env["P1"]), ("new", env["Gp"], env["P1p"])]:
        sols = all_geometries_on(graph)
        line_sets = [s.lines for s in sols]
        contains = g.lines in line_sets
        iso_all = all(is_isomorphic(g, s) for s in sols)
        entry = {
            "solutions": len(sols),
            "contains_line_set": contains,
            "all_isomorphic": iso_all,
        }
        if name == "vls":
            entry["contains_negative_lines"] = tuple(con.negative_lines(g)) in line_sets
            ok = ok and entry["contains_negative_lines"]
        out[name] = entry
        ok = ok and contains and iso_all and len(sols) >= 1
    return {"pass": ok, "got": out}


def _claim_mms_weightings(env) -> dict:
    out = {}
    ok = True
    for name, g in [("vls", env["G"]), ("new", env["Gp"])]:
        w = star_weighting(g, 0)
        star_count, star_mask = count_nonnegative_lines(g, w)
        rep = max_cliques(line_graph(g))
        _, non_stars = classify_line_cliques(g, rep.cliques_of_size_6)
        witness = mms_counterexample_search(g, non_stars[0])
        star_masks = {g.pencil_mask(p) for p in range(g.v)}
        entry: dict = {"star_weighting_nonnegative": star_count}
        if witness is None:
            entry["witness"] = None
            entry["note"] = "search space exhausted; not a refutation"
            ok = False
        else:
            count, nonneg = count_nonnegative_lines(g, witness)
            entry["witness"] = {
                "weights": sorted(set(witness.weights)),
                "nonnegative_count": count,
                "nonnegative_is_star": nonneg in star_masks,
                "below_star_size": count < 6,
            }
            ok = ok and count <= 6 and nonneg not in star_masks
        ok = ok and star_count == 6
        out[name] = entry
    return {"pass": ok, "got": out}


def _cmd_report(args) -> int:
    try:
        os.makedirs(args.out, exist_ok=True)
    except OSError as e:
        print(f"error: cannot create {args.out}: {e}", file=sys.stderr)
        return 2
    t0 = time.time()
    env = {"G": con.build_vls(), "Gp": con.build_new()}
    env["P1"] = point_graph(env["G"])
    env["P1p"] = point_graph(env["Gp"])
    env["L2"] = line_graph(env["G"])
    env["L2p"] = line_graph(env["Gp"])
    env["autG"] = aut_incidence(env["G"])
    env["autGp"] = aut_incidence(env["Gp"])
    claims = [
        ("pg_parameters", lambda: _claim_pg_parameters(env)),
        ("srg_parameters", lambda: _claim_srg_parameters(env)),
        ("isomorphism_and_duality",
         lambda: _claim_isomorphism_and_duality(env, args.relabelings)),
        ("automorphism_orders", lambda: _claim_automorphism_orders(env)),
        ("new_geometry_orbits", lambda: _claim_new_geometry_orbits(env)),
        ("clique_census", lambda: _claim_clique_census(env)),
        ("subspace_census", lambda: _claim_subspace_census(env)),
        ("difference_set_identities", lambda: _claim_difference_set_identities(env)),
        ("local_configuration", lambda: _claim_local_configuration(env)),
        ("exact_cover_geometries", lambda: _claim_exact_cover_geometries(env)),
        ("mms_weightings", lambda: _claim_mms_weightings(env)),
    ]
    summary = {}
    details = {}
    for name, fn in claims:
        t1 = time.time()
        detail = fn()
        print(f"{name}: {'ok' if detail['pass'] else 'FAIL'}"
              f" ({time.time() - t1:.1f}s)", file=sys.stderr)
        doc = {"claim": name, **detail}
        path = os.path.join(args.out, f"{name}.json")
        with open(path, "w") as f:
            f.write(json.dumps(doc, sort_keys=True, indent=2, default=_encode_json) + "\n")
        summary[name] = detail["pass"]
        details[name] = detail
    all_pass = all(summary.values())
    headline = {
        "isomorphic": details["isomorphism_and_duality"]["isomorphic"],
        "self_dual": details["isomorphism_and_duality"]["self_dual"],
        "six_clique_counts": details["clique_census"]["size_6_cliques"],
        "automorphism_orders": details["automorphism_orders"]["got"],
    }
    with open(os.path.join(args.out, "summary.json"), "w") as f:
        f.write(json.dumps({"claims": summary, "headline": headline,
                            "all_pass": all_pass},
                           sort_keys=True, indent=2) + "\n")
    print(f"total {time.time() - t0:.1f}s", file=sys.stderr)
    _emit("report", {"out": args.out, "relabelings": args.relabelings},
          {"claims": summary, "headline": headline, "all_pass": all_pass})
    return 0 if all_pass else 1


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pg552",
        description="Build and verify the two partial geometries pg(5,5,2) on 81 points.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write a geometry as an incidence file")
    p.add_argument("--geometry", required=True, choices=["vls", "new"])
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_build)

    p = sub.add_parser("verify", help="verify the pg axioms of an incidence file")
    p.add_argument("file")
    p.add_argument("--expect", help="s,t,alpha to require, e.g. 5,5,2")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("srg", help="certify strong regularity of the point or line graph")
    p.add_argument("file")
    p.add_argument("--graph", choices=["point", "line"], default="point")
    p.set_defaults(fn=_cmd_srg)

    p = sub.add_parser("local", help="local collinearity configuration of a collinear pair")
    p.add_argument("file")
    p.add_argument("--x", type=int, default=0)
    p.add_argument("--y", type=int, default=1)
    p.set_defaults(fn=_cmd_local)

    p = sub.add_parser("cliques", help="maximal clique census of the point or line graph")
    p.add_argument("file")
    p.add_argument("--graph", choices=["point", "line"], default="point")
    p.add_argument("--list", action="store_true")
    p.set_defaults(fn=_cmd_cliques)

    p = sub.add_parser("aut", help="automorphism group of an incidence file")
    p.add_argument("file")
    p.add_argument("--on", choices=["points", "lines"], default="points")
    p.set_defaults(fn=_cmd_aut)

    p = sub.add_parser("iso", help="isomorphism test for two incidence files")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(fn=_cmd_iso)

    p = sub.add_parser("dual", help="self-duality check; optionally write the dual")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_dual)

    p = sub.add_parser("cover", help="all geometries supported by the point graph")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_cover)

    p = sub.add_parser("mms", help="zero-sum weighting counterexample search")
    p.add_argument("file")
    p.add_argument("--clique", type=int, default=0,
                   help="index into the non-star 6-cliques of the line graph")
    p.add_argument("--bound", type=int, default=81)
    p.set_defaults(fn=_cmd_mms)

    p = sub.add_parser("report", help="run the full claim suite and write JSON reports")
    p.add_argument("--all", action="store_true", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--relabelings", type=int, default=50)
    p.set_defaults(fn=_cmd_report)

    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    t0 = time.time()
    code = args.fn(args)
    print(f"elapsed: {time.time() - t0:.2f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
