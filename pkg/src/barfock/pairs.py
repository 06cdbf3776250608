"""Pairs of blocks linked by f_i^(k), and their verification.

A core with k >= 1 addable i-nodes (it then has no removable ones) sits
below its partner core obtained by adding them all.  For each such pair,
either every block member is unexceptional and the two decomposition
matrices agree under the signature involution, or -- at weight 2, for the
two interesting shapes -- exactly three exceptional partitions appear on
each side, with completely explicit operator identities and a short list
of admissible column patterns tying the two matrices together.
"""

from dataclasses import dataclass

from . import abacus
from . import fock
from . import partitions as pt
from .canonical import canonical_basis, psi
from .laurent import parse as L


@dataclass(frozen=True)
class PairDescriptor:
	h: int
	source: tuple
	target: tuple
	i: int
	k: int
	kind: str  # "A" / "B" / "C" / "zero-residue" / "generic"


def detect_pairs(sigma, h):
	"""One descriptor per residue at which the core has addable nodes."""
	sigma = tuple(sigma)
	if not pt.is_core(sigma, h):
		raise ValueError("%r is not a %d-bar-core" % (sigma, h))
	n = pt.n_of(h)
	out = []
	for i in range(n + 1):
		add = pt.addable_i_nodes(sigma, i, h)
		if not add:
			continue
		assert not pt.removable_i_nodes(sigma, i, h), \
			"a core cannot have addable and removable %d-nodes at once" % i
		tau = psi(sigma, i, h)
		assert pt.is_core(tau, h), "partner of a core should be a core"
		k = len(add)
		if i == 0:
			kind = "zero-residue"
		elif k == 1 and i < n:
			c = add[0][1]
			if c == i + 1:
				kind = "B"
			elif c % h == i + 1:
				kind = "A"  # column ah + i + 1 with a >= 1
			else:
				assert (c + i) % h == 0
				kind = "C"  # column ah - i with a >= 1
		else:
			kind = "generic"
		out.append(PairDescriptor(h=h, source=sigma, target=tau, i=i, k=k, kind=kind))
	return out


def is_unexceptional(lam, d, side):
	if side == "source":
		return not pt.removable_i_nodes(lam, d.i, d.h)
	if side == "target":
		return not pt.addable_i_nodes(lam, d.i, d.h)
	raise ValueError("side must be 'source' or 'target'")


# ---------------------------------------------------------------------------
# exceptional triples
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExceptionalTriples:
	alpha: tuple
	beta: tuple
	gamma: tuple
	alpha_hat: tuple
	beta_hat: tuple
	gamma_hat: tuple

	def source(self):
		return (self.alpha, self.beta, self.gamma)

	def target(self):
		return (self.alpha_hat, self.beta_hat, self.gamma_hat)


def _pair_shape(d, w):
	"""'21' / '23' for the supported shapes, None otherwise."""
	if w == 2 and d.k == 1 and 1 <= d.i < pt.n_of(d.h):
		return "21"
	if w == 2 and d.k == 3 and d.i == 0:
		return "23"
	return None


def _expected_tags(d, shape):
	i = d.i
	pair = abacus.pair_tag
	single = abacus.single_tag
	if shape == "23":
		return (
			(single(1), pair(0, 1), single(0)),
			(single(0), pair(0, 1), single(-1)),
		)
	table = {
		"A": ((single(-i), pair(i, i + 1), single(i + 1)),
			(single(i), pair(i, i + 1), single(-i - 1))),
		"B": ((pair(i, i + 1), single(-i), single(i + 1)),
			(single(i), single(-i - 1), pair(i, i + 1))),
		"C": ((single(i + 1), pair(i, i + 1), single(-i)),
			(single(-i - 1), pair(i, i + 1), single(i))),
	}
	return table[d.kind]


def _dominance_sorted_triple(lams):
	assert len(lams) == 3
	out = []
	for x in lams:
		others = [y for y in lams if y != x]
		rank = sum(1 for y in others if pt.strictly_dominates(x, y))
		out.append((rank, x))
	ranks = sorted(r for r, _ in out)
	assert ranks == [0, 1, 2], "exceptional partitions do not form a chain"
	return tuple(x for _, x in sorted(out))


def exceptional_triples(d, w=2):
	shape = _pair_shape(d, w)
	if shape is None:
		raise ValueError("exceptional triples exist only for weight-2 pairs "
			"with k=1 and 0<i<n, or k=3 and i=0")
	h = d.h
	sblock = pt.BlockId(h, d.source, w)
	tblock = pt.BlockId(h, d.target, w)
	exc_s = [lam for lam in pt.enumerate_block(sblock)
		if not is_unexceptional(lam, d, "source")]
	exc_t = [lam for lam in pt.enumerate_block(tblock)
		if not is_unexceptional(lam, d, "target")]
	assert len(exc_s) == 3 and len(exc_t) == 3, \
		"expected three exceptional partitions on each side, got %d/%d" \
		% (len(exc_s), len(exc_t))
	a, b, g = _dominance_sorted_triple(exc_s)
	ah, bh, gh = _dominance_sorted_triple(exc_t)
	src_tags, tgt_tags = _expected_tags(d, shape)
	got_src = tuple(abacus.abacus_notation(x, sblock) for x in (a, b, g))
	got_tgt = tuple(abacus.abacus_notation(x, tblock) for x in (ah, bh, gh))
	assert got_src == src_tags, \
		"source tags %s do not match the %s pattern %s" % (got_src, d.kind, src_tags)
	assert got_tgt == tgt_tags, \
		"target tags %s do not match the %s pattern %s" % (got_tgt, d.kind, tgt_tags)
	assert psi(a, d.i, h) == ah and psi(b, d.i, h) == gh and psi(g, d.i, h) == bh, \
		"signature involution does not permute the triples as expected"
	return ExceptionalTriples(a, b, g, ah, bh, gh)


# ---------------------------------------------------------------------------
# the admissible column patterns
# ---------------------------------------------------------------------------

def _rows(*specs):
	return tuple(
		(tuple(L(s) for s in left), tuple(L(s) for s in right))
		for left, right in specs
	)


TABLE_21 = _rows(
	(("0", "0", "0"), ("0", "0", "0")),
	(("0", "0", "1"), ("0", "1", "q^2")),
	(("0", "1", "q^2"), ("0", "0", "1")),
	(("0", "q^2", "0"), ("q^2", "0", "q^2")),
	(("1", "q^2", "q^4"), ("1", "q^2", "q^4")),
	(("q^2", "0", "q^2"), ("0", "q^2", "0")),
	(("q^2", "q^4", "0"), ("q^4", "0", "0")),
	(("q^4", "0", "0"), ("q^2", "q^4", "0")),
	(("0", "q^3 + q", "0"), ("q^3 + q", "0", "q^3 + q")),
	(("q^2", "q^4 + q^2", "0"), ("q^4 + q^2", "0", "q^2")),
	(("q^3 + q", "q^5 + q^3", "0"), ("q^5 + q^3", "0", "0")),
	(("q^3 + q", "0", "q^3 + q"), ("0", "q^3 + q", "0")),
)

FORBIDDEN_21 = tuple(
	tuple(L(s) for s in row)
	for row in (("0", "q", "0"), ("q", "0", "q"),
		("q^2", "q^3", "0"), ("q^3 + q", "q^2", "q^2"))
)

TABLE_23 = _rows(
	(("0", "0", "0"), ("0", "0", "0")),
	(("0", "0", "1"), ("0", "1", "q^2")),
	(("0", "1", "q^2"), ("0", "0", "1")),
	(("0", "q^2", "0"), ("q^2", "0", "q^2")),
	(("1", "q", "q^3"), ("1", "q^2", "q^4")),
	(("q^2", "0", "q"), ("0", "q", "0")),
	(("q^2", "q^3", "0"), ("q^3", "0", "0")),
	(("q^4", "0", "0"), ("q", "q^3", "0")),
	(("0", "q^3 + q", "0"), ("q^3 + q", "0", "q^3 + q")),
	(("q^3 + q", "q^2", "q^2"), ("q^2", "q^2", "0")),
)

FORBIDDEN_23 = tuple(
	tuple(L(s) for s in row)
	for row in (("q^2", "q^4 + q^2", "0"), ("q^3 + q", "0", "q^3 + q"),
		("q^3 + q", "q^5 + q^3", "0"))
)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

class PairReport:
	"""Outcome of verify_pair: named checks, each passed/failed/skipped."""

	def __init__(self, descriptor, weight):
		self.descriptor = descriptor
		self.weight = weight
		self.checks = []

	def add(self, name, ok, detail=""):
		self.checks.append((name, "pass" if ok else "fail", "" if ok else detail))

	def skip(self, name, detail):
		self.checks.append((name, "skipped", detail))

	@property
	def ok(self):
		return all(status != "fail" for _, status, _ in self.checks)

	@property
	def failures(self):
		return [(n, d) for n, s, d in self.checks if s == "fail"]

	def to_json_obj(self):
		d = self.descriptor
		return {
			"h": d.h,
			"source": pt.partition_str(d.source),
			"target": pt.partition_str(d.target),
			"i": d.i,
			"k": d.k,
			"kind": d.kind,
			"weight": self.weight,
			"ok": self.ok,
			"checks": [
				{"name": n, "status": s, "detail": dd}
				for n, s, dd in self.checks
			],
		}


def _f_identity_checks(report, d, tr, w):
	"""The explicit operator identities on the exceptional triples."""
	h, i = d.h, d.i
	basis = lambda lam: fock.FockVector.basis(h, lam)
	shape = _pair_shape(d, w)
	a, b, g = tr.source()
	ah, bh, gh = tr.target()
	if shape == "21":
		expect = [
			(a, {ah: L("q^-2"), bh: L("1")}),
			(b, {ah: L("1"), gh: L("1")}),
			(g, {bh: L("1"), gh: L("q^2")}),
		]
	else:
		expect = [
			(a, {ah: L("q^-3"), bh: L("q^-1")}),
			(b, {ah: L("1 + q^-2"), bh: L("1"), gh: L("q^2 + 1")}),
			(g, {ah: L("1"), bh: L("q^2 + 1"), gh: L("q^4 + q^2")}),
		]
	ok = True
	detail = ""
	for lam, want in expect:
		got = fock.apply_f(basis(lam), i, d.k)
		if got != fock.FockVector(h, want):
			ok = False
			detail = "f-image of %s is %s" % (pt.partition_str(lam), got)
			break
	report.add("exceptional-f-identities", ok, detail)

	# the e-side: removing the unique removable i-node of any of alpha,
	# beta, gamma lands on one core partition delta, and f_i resurrects
	# the whole triple from it
	deltas = set()
	for lam in tr.source():
		down = fock.apply_e(basis(lam), i, 1)
		deltas.update(down.support())
	if shape == "21":
		e_coeffs = {a: L("q^-4"), b: L("q^-2"), g: L("1")}
		f_back = {a: L("1"), b: L("q^2"), g: L("q^4")}
	else:
		e_coeffs = {a: L("q^-4"), b: L("q^-1 + q^-3"), g: L("q + q^-1")}
		f_back = {a: L("1"), b: L("q"), g: L("q^3")}
	ok = len(deltas) == 1
	detail = "" if ok else "no single source below the triple: %s" % (sorted(deltas),)
	if ok:
		delta = next(iter(deltas))
		for lam, c in e_coeffs.items():
			got = fock.apply_e(basis(lam), i, 1)
			if got != fock.FockVector(h, {delta: c}):
				ok = False
				detail = "e-image of %s is %s" % (pt.partition_str(lam), got)
				break
		if ok:
			got = fock.apply_f(basis(delta), i, 1)
			want = fock.FockVector(h, {lam: c for lam, c in f_back.items()})
			if got != want:
				ok = False
				detail = "f-image of the partition below the triple is %s" % got
	report.add("exceptional-e-identities", ok, detail)


def verify_pair(d, w=2, oracle=canonical_basis):
	"""Check everything the pair is supposed to satisfy at weight w."""
	report = PairReport(d, w)
	h, i = d.h, d.i
	if d.i == 0 and d.k == 1:
		report.skip("all", "declined: residue-0 pairs with k=1 relate blocks "
			"whose canonical bases genuinely differ")
		return report

	sblock = pt.BlockId(h, d.source, w)
	tblock = pt.BlockId(h, d.target, w)
	smembers = pt.enumerate_block(sblock)
	tmembers = pt.enumerate_block(tblock)

	# the involution must carry one block onto the other
	images = [psi(lam, i, h) for lam in smembers]
	report.add("block-bijection", sorted(images) == tmembers,
		"involution images do not exhaust the partner block")

	# unexceptional members transport by a plain f_i^(k)
	bad = ""
	for lam in smembers:
		if not is_unexceptional(lam, d, "source"):
			continue
		if len(pt.addable_i_nodes(lam, i, h)) != d.k:
			bad = "%s has the wrong number of addable nodes" % pt.partition_str(lam)
			break
		got = fock.apply_f(fock.FockVector.basis(h, lam), i, d.k)
		if got != fock.FockVector.basis(h, psi(lam, i, h)):
			bad = "f-image of unexceptional %s is %s" % (pt.partition_str(lam), got)
			break
	report.add("unexceptional-f-transport", not bad, bad)

	exc_s = [lam for lam in smembers if not is_unexceptional(lam, d, "source")]
	exc_t = [lam for lam in tmembers if not is_unexceptional(lam, d, "target")]

	ms = oracle(sblock)
	mt = oracle(tblock)

	if not exc_s:
		report.add("equivalent-no-target-exceptions", not exc_t,
			"source side clean but target side is not")
		ok = True
		detail = ""
		for mu in ms.cols:
			pm = psi(mu, i, h)
			for lam in ms.rows:
				if ms.entry(lam, mu) != mt.entry(psi(lam, i, h), pm):
					ok = False
					detail = "matrices differ at (%s, %s)" % (
						pt.partition_str(lam), pt.partition_str(mu))
					break
			if not ok:
				break
		report.add("matrix-transport", ok, detail)
		return report

	shape = _pair_shape(d, w)
	if shape is None:
		report.skip("exceptional-structure",
			"%d exceptional partitions; no supported verification shape "
			"at weight %d, residue %d, k=%d" % (len(exc_s), w, i, d.k))
		return report

	tr = exceptional_triples(d, w)
	report.add("exceptional-triples", True, "")

	_f_identity_checks(report, d, tr, w)

	# canonical-basis columns at the bottom exceptional partition
	want_a = {("21"): ("1", "q^2", "q^4"), ("23"): ("1", "q", "q^3")}[shape]
	col_a = ms.column(tr.alpha)
	ok = col_a == fock.FockVector(h, {
		tr.alpha: L(want_a[0]), tr.beta: L(want_a[1]), tr.gamma: L(want_a[2])})
	report.add("exceptional-column-source", ok,
		"" if ok else "G at the source triple bottom is %s" % col_a)
	col_ah = mt.column(tr.alpha_hat)
	ok = col_ah == fock.FockVector(h, {
		tr.alpha_hat: L("1"), tr.beta_hat: L("q^2"), tr.gamma_hat: L("q^4")})
	report.add("exceptional-column-target", ok,
		"" if ok else "G at the target triple bottom is %s" % col_ah)

	table = TABLE_21 if shape == "21" else TABLE_23
	forbidden = FORBIDDEN_21 if shape == "21" else FORBIDDEN_23
	unex = [lam for lam in smembers if lam not in exc_s]
	ok = True
	detail = ""
	for mu in ms.cols:
		left = tuple(ms.entry(x, mu) for x in tr.source())
		if left in forbidden:
			ok = False
			detail = "forbidden pattern at column %s" % pt.partition_str(mu)
			break
		rights = [r for l, r in table if l == left]
		if not rights:
			ok = False
			detail = "unlisted pattern at column %s: %s" % (
				pt.partition_str(mu), [str(v) for v in left])
			break
		pm = psi(mu, i, h)
		if not pt.is_restricted(pm, h):
			ok = False
			detail = "involution image of column %s is not restricted" % \
				pt.partition_str(mu)
			break
		right = tuple(mt.entry(x, pm) for x in tr.target())
		if right != rights[0]:
			ok = False
			detail = "partner column %s does not match the pattern table" % \
				pt.partition_str(pm)
			break
		for lam in unex:
			if ms.entry(lam, mu) != mt.entry(psi(lam, i, h), pm):
				ok = False
				detail = "unexceptional transport fails at (%s, %s)" % (
					pt.partition_str(lam), pt.partition_str(mu))
				break
		if not ok:
			break
	report.add("column-patterns", ok, detail)
	return report
