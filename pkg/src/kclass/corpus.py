"""Group-definition files, the bundled catalog, and reference table data.

File grammar (one directive per line, ``#`` starts a comment anywhere):

    name <string>
    degree <n>
    section ambient        # optional; a file without section headers is a
    gen v0 v1 ... v(n-1)   # single group serving as its own ambient
    section socle
    gen ...

Images are 0-based and space-separated.  The catalog manifest is
tab-separated with ``-`` for absent values::

    name  path  family  order  out_index  k  k_star  gamma_bound  shape  flags
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from pathlib import Path

from .autorbits import validate_pair
from .bounds import Family, LieFamilySpec, lie_facts
from .constants import DEFAULT_CAP
from .errors import ParseError, ValidationError
from .permcore import FiniteGroup, Permutation

DATA_DIR = Path(__file__).parent / "data"
SECTION_TAGS = ("ambient", "socle")


@dataclass(frozen=True)
class GroupFile:
    name: str
    degree: int
    sections: tuple  # ((tag, (Permutation, ...)), ...)

    def generators(self, tag):
        for t, gens in self.sections:
            if t == tag:
                return gens
        return None


def parse_group_file(text):
    """Parse the grammar above; errors carry 1-based line numbers."""
    name = None
    degree = None
    sections = []
    current = None  # (tag, [gens])
    loose_gens = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        key = parts[0]
        if name is None:
            if key != "name" or len(parts) < 2:
                raise ParseError("expected 'name <string>' first", lineno)
            name = " ".join(parts[1:])
            continue
        if degree is None:
            if key != "degree" or len(parts) != 2 or not parts[1].isdigit():
                raise ParseError("expected 'degree <n>' second", lineno)
            degree = int(parts[1])
            if degree < 1:
                raise ParseError("degree must be positive", lineno)
            continue
        if key == "section":
            if len(parts) != 2 or parts[1] not in SECTION_TAGS:
                raise ParseError(f"section tag must be one of {SECTION_TAGS}", lineno)
            if loose_gens:
                raise ParseError("generators before the first section header", lineno)
            if any(tag == parts[1] for tag, _ in sections) or (
                current and current[0] == parts[1]
            ):
                raise ParseError(f"duplicate section '{parts[1]}'", lineno)
            if current:
                sections.append((current[0], tuple(current[1])))
            current = (parts[1], [])
            continue
        if key == "gen":
            if len(parts) != degree + 1:
                raise ParseError(
                    f"generator line needs exactly {degree} images, got {len(parts) - 1}",
                    lineno,
                )
            try:
                images = [int(v) for v in parts[1:]]
            except ValueError:
                raise ParseError("generator images must be integers", lineno) from None
            try:
                perm = Permutation(images)
            except ValueError:
                raise ParseError(f"not a bijection of 0..{degree - 1}", lineno) from None
            (current[1] if current else loose_gens).append(perm)
            continue
        raise ParseError(f"unknown directive {key!r}", lineno)

    if name is None or degree is None:
        raise ParseError("file must declare name and degree")
    if current:
        sections.append((current[0], tuple(current[1])))
    if loose_gens:
        sections.append(("ambient", tuple(loose_gens)))
    if not sections:
        raise ParseError("file has no generator sections")
    tags = [t for t, _ in sections]
    if "socle" in tags and "ambient" not in tags:
        raise ParseError("a socle section requires an ambient section")
    return GroupFile(name, degree, tuple(sections))


def serialize_group_file(gf):
    lines = [f"name {gf.name}", f"degree {gf.degree}"]
    for tag, gens in gf.sections:
        lines.append(f"section {tag}")
        for g in gens:
            lines.append("gen " + " ".join(str(x) for x in g.images))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CatalogEntry:
    """One catalog row: a group file plus its declared expectations."""

    name: str
    path: str | None
    family: str | None  # e.g. "alt:5", "spor:M11", "psl2:8", "psl3:4"
    order: int | None  # expected |T|
    out_index: int | None  # expected |ambient| / |T|
    k: int | None  # expected k(T)
    k_star: int | None  # expected ambient-orbit count on T
    gamma_bound: float | None
    socle_shape: str | None  # "n1:k1[,n2:k2...]"
    flags: frozenset

    @property
    def is_formula_only(self):
        return self.path is None

    @property
    def is_simple(self):
        return "simple" in self.flags

    @property
    def is_full_aut(self):
        return "full-aut" in self.flags

    def lie_spec(self):
        """LieFamilySpec for psl2/psl3 tags, else None."""
        if not self.family:
            return None
        kind, _, arg = self.family.partition(":")
        if kind == "psl2":
            q = int(arg)
            from .bounds import prime_power_decomposition

            p, f = prime_power_decomposition(q)
            return LieFamilySpec(Family.LINEAR, 2, p, f)
        if kind == "psl3":
            q = int(arg)
            from .bounds import prime_power_decomposition

            p, f = prime_power_decomposition(q)
            return LieFamilySpec(Family.LINEAR, 3, p, f)
        return None

    def alt_degree(self):
        if self.family and self.family.startswith("alt:"):
            return int(self.family.split(":")[1])
        return None


def _parse_opt_int(token, lineno):
    if token == "-":
        return None
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected integer or '-', got {token!r}", lineno) from None


def _parse_opt_float(token, lineno):
    if token == "-":
        return None
    try:
        return float(token)
    except ValueError:
        raise ParseError(f"expected real or '-', got {token!r}", lineno) from None


def parse_catalog(text):
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise ParseError(f"manifest rows need 10 tab-separated columns, got {len(cols)}", lineno)
        name, path, family, order, out_index, k, k_star, gbound, shape, flags = cols
        entries.append(
            CatalogEntry(
                name=name,
                path=None if path == "-" else path,
                family=None if family == "-" else family,
                order=_parse_opt_int(order, lineno),
                out_index=_parse_opt_int(out_index, lineno),
                k=_parse_opt_int(k, lineno),
                k_star=_parse_opt_int(k_star, lineno),
                gamma_bound=_parse_opt_float(gbound, lineno),
                socle_shape=None if shape == "-" else shape,
                flags=frozenset() if flags == "-" else frozenset(flags.split(",")),
            )
        )
    return tuple(entries)


def default_manifest_path():
    env = os.environ.get("KCLASS_CATALOG")
    return Path(env) if env else DATA_DIR / "catalog.tsv"


def load_catalog(manifest_path=None):
    path = Path(manifest_path) if manifest_path else default_manifest_path()
    return parse_catalog(path.read_text(encoding="utf-8"))


def bundled_catalog():
    """The committed catalog: every desk-scale pair plus formula-only rows."""
    return load_catalog()


def load_group_file(entry, manifest_path=None):
    if entry.path is None:
        raise ValidationError(f"{entry.name} is formula-only; no group file")
    base = (Path(manifest_path) if manifest_path else default_manifest_path()).parent
    return parse_group_file((base / entry.path).read_text(encoding="utf-8"))


def realize(entry, cap=DEFAULT_CAP, manifest_path=None):
    """Build the AmbientPair for an entry and enforce its declared facts:
    normality, |socle| = expected order, and ambient/socle index."""
    gf = load_group_file(entry, manifest_path)
    ambient_gens = gf.generators("ambient")
    socle_gens = gf.generators("socle") or ambient_gens
    ambient = FiniteGroup(gf.degree, ambient_gens)
    try:
        pair = validate_pair(ambient, socle_gens, cap, expected_index=entry.out_index)
    except ValidationError as exc:
        raise ValidationError(f"{entry.name}: {exc}") from exc
    if entry.order is not None and pair.socle.order(cap) != entry.order:
        raise ValidationError(
            f"{entry.name}: socle order {pair.socle.order(cap)} != declared {entry.order}")
    return pair


# Orders and outer-automorphism-group orders of the sporadic groups and the
# Tits group, keyed by the names used in the catalog.
SPORADIC_FACTS = {
    "M11": (7_920, 1),
    "M12": (95_040, 2),
    "M22": (443_520, 2),
    "M23": (10_200_960, 1),
    "M24": (244_823_040, 1),
    "J1": (175_560, 1),
    "J2": (604_800, 2),
    "J3": (50_232_960, 2),
    "HS": (44_352_000, 2),
    "McL": (898_128_000, 2),
    "Suz": (448_345_497_600, 2),
    "Ru": (145_926_144_000, 1),
    "He": (4_030_387_200, 2),
    "Ly": (51_765_179_004_000_000, 1),
    "ON": (460_815_505_920, 2),
    "Co1": (4_157_776_806_543_360_000, 1),
    "Co2": (42_305_421_312_000, 1),
    "Co3": (495_766_656_000, 1),
    "Fi22": (64_561_751_654_400, 2),
    "Fi23": (4_089_470_473_293_004_800, 1),
    "Fi24'": (1_255_205_709_190_661_721_292_800, 2),
    "HN": (273_030_912_000_000, 2),
    "Th": (90_745_943_887_872_000, 1),
    "B": (4_154_781_481_226_426_191_177_580_544_000_000, 1),
    "M": (808017424794512875886459904961710757005754368000000000, 1),
    "2F4(2)'": (17_971_200, 2),
}


def formula_log2_aut(entry):
    """Exact |Aut(T)| (as base-2 bits) for a formula-only row."""
    if entry.family is None:
        raise ValidationError(f"{entry.name}: no family tag")
    kind, _, arg = entry.family.partition(":")
    if kind == "alt":
        n = int(arg)
        if n == 6:
            return math.log2(2 * math.factorial(6))
        return math.log2(math.factorial(n))
    if kind == "spor":
        order, out = SPORADIC_FACTS[arg]
        return math.log2(order * out)
    if kind in ("psl2", "psl3"):
        facts = lie_facts(entry.lie_spec())
        return math.log2(facts.exact_aut_order)
    raise ValidationError(f"{entry.name}: no exact |Aut| formula for {entry.family}")
