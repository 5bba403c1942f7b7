"""Slater-type-orbital basis data: types, file grammar, validation, fixtures.

File grammar (UTF-8 text, ``#`` starts a comment, blank lines ignored)::

    atom Z=<int> symbol=<token>
    orbital n=<int> l=<int> occ=<real>
    primitive n_jl=<int> zeta=<real> c=<real>

Each ``primitive`` line attaches to the preceding ``orbital``, each
``orbital`` to the preceding ``atom``. The ionization-potential table is
CSV with header ``Z,symbol,I1_hartree``.

Published RHF tabulations (Bunge et al. style) are treated as user-supplied
data files in this grammar; the package ships only analytic fixtures.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

from .errors import BasisFormatError, DataError
from .quadrature import DEFAULT_SPEC, QuadratureSpec, integrate_semi_infinite

_MAX_PRIMITIVE_N = 12


@dataclass(frozen=True)
class SlaterPrimitive:
    """One Slater-type radial primitive r^(n-1) e^(-zeta r) (normalization implied)."""

    n: int
    zeta: float

    def __post_init__(self):
        if self.n < 1 or self.n != int(self.n):
            raise ValueError(f"primitive principal quantum number must be >= 1, got {self.n}")
        if self.n > _MAX_PRIMITIVE_N:
            raise ValueError(
                f"primitive n={self.n} beyond supported range (n <= {_MAX_PRIMITIVE_N})"
            )
        if not self.zeta > 0:
            raise ValueError(f"orbital exponent must be positive, got {self.zeta}")


@dataclass(frozen=True)
class Orbital:
    """One (n, l) subshell: occupancy plus its STO expansion."""

    n: int
    l: int
    occupancy: float
    coefficients: tuple[tuple[float, SlaterPrimitive], ...]

    def __post_init__(self):
        if self.l < 0:
            raise ValueError(f"azimuthal quantum number must be >= 0, got {self.l}")
        if self.l >= self.n:
            raise ValueError(f"orbital requires l < n, got n={self.n}, l={self.l}")
        capacity = 2 * (2 * self.l + 1)
        if not 0 < self.occupancy <= capacity:
            raise ValueError(
                f"occupancy {self.occupancy} outside (0, {capacity}] for l={self.l}"
            )
        if not self.coefficients:
            raise ValueError("orbital needs at least one primitive")
        object.__setattr__(self, "coefficients", tuple(self.coefficients))

    @property
    def label(self) -> str:
        return f"{self.n}{'spdfgh'[self.l] if self.l < 6 else f'(l={self.l})'}"


@dataclass(frozen=True)
class AtomBasis:
    """STO expansion data for one atom."""

    z: int
    symbol: str
    orbitals: tuple[Orbital, ...]

    def __post_init__(self):
        if self.z < 1 or self.z != int(self.z):
            raise ValueError(f"atomic number must be a positive integer, got {self.z}")
        object.__setattr__(self, "orbitals", tuple(self.orbitals))

    @property
    def electron_count(self) -> float:
        return sum(orb.occupancy for orb in self.orbitals)


@dataclass(frozen=True)
class IonizationTable:
    """First ionization potentials I1 (Hartree) keyed by atomic number."""

    entries: dict[int, float]

    def __post_init__(self):
        for z, value in self.entries.items():
            if not value > 0:
                raise ValueError(f"ionization potential for Z={z} must be positive, got {value}")

    def __getitem__(self, z: int) -> float:
        return self.entries[z]


@dataclass
class ValidationReport:
    """Outcome of validate_basis: residuals plus flagged failures."""

    symbol: str
    tol: float
    orbital_residuals: list[tuple[str, float]] = field(default_factory=list)
    occupancy_residual: float = 0.0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _parse_kv(parts: list[str], expected: dict[str, type], line_no: int) -> dict:
    out = {}
    seen = set()
    for part in parts:
        if "=" not in part:
            raise BasisFormatError(f"expected key=value, got {part!r}", line_no)
        key, _, raw = part.partition("=")
        if key not in expected:
            raise BasisFormatError(f"unknown field {key!r}", line_no)
        if key in seen:
            raise BasisFormatError(f"duplicate field {key!r}", line_no)
        seen.add(key)
        caster = expected[key]
        try:
            out[key] = caster(raw)
        except ValueError as exc:
            raise BasisFormatError(f"bad value for {key}: {raw!r}", line_no) from exc
    missing = set(expected) - seen
    if missing:
        raise BasisFormatError(f"missing field(s) {sorted(missing)}", line_no)
    return out


def parse_basis_file(text: str) -> list[AtomBasis]:
    """Parse basis-file content into a list of AtomBasis, ordered as written.

    Raises BasisFormatError (with the offending line number) on syntax
    errors, duplicate atoms, occupancies above subshell capacity, and
    non-positive exponents. The occupancy sum versus Z is *not* enforced
    here; validate_basis reports it.
    """
    atoms: list[dict] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind, fields = parts[0], parts[1:]
        if kind == "atom":
            kv = _parse_kv(fields, {"Z": int, "symbol": str}, line_no)
            for prev in atoms:
                if prev["z"] == kv["Z"] or prev["symbol"] == kv["symbol"]:
                    raise BasisFormatError(
                        f"duplicate atom Z={kv['Z']} symbol={kv['symbol']}", line_no
                    )
            atoms.append({"z": kv["Z"], "symbol": kv["symbol"], "orbitals": []})
        elif kind == "orbital":
            if not atoms:
                raise BasisFormatError("orbital before any atom", line_no)
            kv = _parse_kv(fields, {"n": int, "l": int, "occ": float}, line_no)
            atoms[-1]["orbitals"].append(
                {"n": kv["n"], "l": kv["l"], "occ": kv["occ"], "prims": [], "line": line_no}
            )
        elif kind == "primitive":
            if not atoms or not atoms[-1]["orbitals"]:
                raise BasisFormatError("primitive before any orbital", line_no)
            kv = _parse_kv(fields, {"n_jl": int, "zeta": float, "c": float}, line_no)
            atoms[-1]["orbitals"][-1]["prims"].append((kv["c"], kv["n_jl"], kv["zeta"], line_no))
        else:
            raise BasisFormatError(f"unknown directive {kind!r}", line_no)

    result = []
    for atom in atoms:
        orbitals = []
        for orb in atom["orbitals"]:
            prims = []
            for c, n_jl, zeta, line_no in orb["prims"]:
                try:
                    prims.append((c, SlaterPrimitive(n=n_jl, zeta=zeta)))
                except ValueError as exc:
                    raise BasisFormatError(str(exc), line_no) from exc
            try:
                orbitals.append(
                    Orbital(n=orb["n"], l=orb["l"], occupancy=orb["occ"], coefficients=tuple(prims))
                )
            except ValueError as exc:
                raise BasisFormatError(str(exc), orb["line"]) from exc
        try:
            result.append(AtomBasis(z=atom["z"], symbol=atom["symbol"], orbitals=tuple(orbitals)))
        except ValueError as exc:
            raise BasisFormatError(str(exc)) from exc
    return result


def format_basis_file(bases: list[AtomBasis]) -> str:
    """Serialize AtomBasis values back into the file grammar (round-trips)."""
    lines = []
    for basis in bases:
        lines.append(f"atom Z={basis.z} symbol={basis.symbol}")
        for orb in basis.orbitals:
            lines.append(f"orbital n={orb.n} l={orb.l} occ={orb.occupancy!r}")
            for c, prim in orb.coefficients:
                lines.append(f"primitive n_jl={prim.n} zeta={prim.zeta!r} c={c!r}")
    return "\n".join(lines) + ("\n" if lines else "")


def validate_basis(
    basis: AtomBasis, tol: float = 1e-6, spec: QuadratureSpec = DEFAULT_SPEC
) -> ValidationReport:
    """Check per-orbital radial normalization and the occupancy sum.

    Returns a report carrying |int R^2 r^2 dr - 1| per orbital and
    |sum(occ) - Z|; entries above ``tol`` are listed as failures. Never
    raises for bad data: the report carries the verdict.
    """
    from .density import sto_radial

    report = ValidationReport(symbol=basis.symbol, tol=tol)
    for orb in basis.orbitals:
        radial = sto_radial(orb)
        norm = integrate_semi_infinite(lambda r: (radial(r) * r) ** 2, spec)
        residual = abs(norm - 1.0)
        report.orbital_residuals.append((orb.label, residual))
        if residual > tol:
            report.failures.append(
                f"orbital {orb.label}: normalization residual {residual:.3e} exceeds {tol:.1e}"
            )
    report.occupancy_residual = abs(basis.electron_count - basis.z)
    if report.occupancy_residual > tol:
        report.failures.append(
            f"occupancies sum to {basis.electron_count!r}, expected Z={basis.z}"
        )
    return report


def hydrogenic_fixture(z_eff: float, symbol: str | None = None) -> AtomBasis:
    """One-electron basis with exact density z_eff^3 exp(-2 z_eff r)/pi.

    The single 1s primitive is exactly normalized, so the fixture
    exercises the full numeric pipeline against closed forms.
    """
    if not z_eff > 0:
        raise ValueError(f"effective charge must be positive, got {z_eff}")
    if symbol is None:
        symbol = "H" if z_eff == 1 else f"H{z_eff:g}"
    orbital = Orbital(
        n=1,
        l=0,
        occupancy=1.0,
        coefficients=((1.0, SlaterPrimitive(n=1, zeta=float(z_eff))),),
    )
    return AtomBasis(z=1, symbol=symbol, orbitals=(orbital,))


def parse_ionization_table(text: str) -> IonizationTable:
    """Parse the ``Z,symbol,I1_hartree`` CSV into an IonizationTable."""
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row and any(cell.strip() for cell in row)]
    if not rows:
        raise DataError("ionization table is empty (missing header)")
    header = [cell.strip() for cell in rows[0]]
    if header != ["Z", "symbol", "I1_hartree"]:
        raise DataError(f"unexpected ionization table header: {header}")
    entries: dict[int, float] = {}
    for row in rows[1:]:
        if len(row) != 3:
            raise DataError(f"malformed ionization row: {row}")
        try:
            z = int(row[0])
            i1 = float(row[2])
        except ValueError as exc:
            raise DataError(f"malformed ionization row: {row}") from exc
        if z in entries:
            raise DataError(f"duplicate ionization entry for Z={z}")
        if not i1 > 0 or not math.isfinite(i1):
            raise DataError(f"ionization potential for Z={z} must be positive, got {i1}")
        entries[z] = i1
    return IonizationTable(entries=entries)
