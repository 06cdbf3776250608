"""Level-1 Fock space combinatorics: vectors, f/e operators.

Vectors are finite Z[q,q^-1]-combinations of h-strict partitions.  The
divided powers f_i^(k) and e_i^(k) act directly: summing over all ways of
adding (removing) k nodes of residue i, with the usual q-coefficient read
off the node configuration.  No quantum-group machinery is needed beyond
that rule.
"""

from . import partitions as pt
from .laurent import Laurent, ZERO, ONE, q_power, _q_i_exponent


class FockVector:
	"""A finite combination of h-strict partitions over Z[q, q^-1]."""

	__slots__ = ("h", "terms")

	def __init__(self, h, terms=None):
		self.h = pt.check_h(h)
		tt = {}
		for lam, c in (terms or {}).items():
			lam = tuple(lam)
			c = c if isinstance(c, Laurent) else Laurent(c)
			if c:
				tt[lam] = c
		self.terms = tt

	@classmethod
	def basis(cls, h, lam, coeff=1):
		return cls(h, {tuple(lam): coeff})

	def coefficient(self, lam):
		return self.terms.get(tuple(lam), ZERO)

	def support(self):
		"""Partitions with nonzero coefficient, lex ascending."""
		return sorted(self.terms)

	def __bool__(self):
		return bool(self.terms)

	def __len__(self):
		return len(self.terms)

	def __add__(self, other):
		assert isinstance(other, FockVector) and other.h == self.h
		tt = dict(self.terms)
		for lam, c in other.terms.items():
			tt[lam] = tt.get(lam, ZERO) + c
		return FockVector(self.h, tt)

	def __sub__(self, other):
		return self + other.scale(-1)

	def scale(self, c):
		c = c if isinstance(c, Laurent) else Laurent(c)
		return FockVector(self.h, {lam: v * c for lam, v in self.terms.items()})

	def __eq__(self, other):
		return isinstance(other, FockVector) and \
			(self.h, self.terms) == (other.h, other.terms)

	def items(self):
		"""(partition, coefficient) pairs, lex ascending."""
		return [(lam, self.terms[lam]) for lam in sorted(self.terms)]

	def to_json_obj(self):
		return [[pt.partition_str(lam), str(c)] for lam, c in self.items()]

	def __str__(self):
		if not self.terms:
			return "0"
		bits = []
		for lam, c in self.items():
			cs = str(c)
			if cs == "1":
				bits.append(pt.partition_str(lam))
			elif "+" in cs or "-" in cs[1:]:
				bits.append("(%s)*%s" % (cs, pt.partition_str(lam)))
			else:
				bits.append("%s*%s" % (cs, pt.partition_str(lam)))
		return " + ".join(bits)

	def __repr__(self):
		return "FockVector(h=%d, %s)" % (self.h, self)


def _added_nodes(lam, mu):
	"""Nodes of [mu] \\ [lam], requiring lam ⊆ mu rowwise."""
	if len(mu) < len(lam):
		raise ValueError("not a containment")
	nodes = []
	for r in range(len(mu)):
		a = lam[r] if r < len(lam) else 0
		if mu[r] < a:
			raise ValueError("not a containment")
		nodes.extend((r + 1, c) for c in range(a + 1, mu[r] + 1))
	return nodes


def n_coefficient_f(lam, mu, i, h):
	"""Coefficient of mu in f_i^(k) lam, k the number of added nodes.

	All added nodes must have residue i (ValueError otherwise).
	"""
	nodes = _added_nodes(lam, mu)
	if any(pt.residue(c, h) != i for _, c in nodes):
		raise ValueError("added nodes are not all of residue %d" % i)
	add_cols = sorted(c for _, c in pt.addable_i_nodes(mu, i, h))
	rem_cols = sorted(c for _, c in pt.removable_i_nodes(lam, i, h))
	s = 0
	for _, c in nodes:
		s += sum(1 for x in add_cols if x < c)
		s -= sum(1 for x in rem_cols if x < c)
	if i != 0:
		return q_power(_q_i_exponent(i, h) * s)
	coeff = q_power(s)
	cols = set(c for _, c in nodes)
	for m in range(1, max(cols) // h + 2):
		if m * h + 1 in cols and m * h not in cols:
			b = lam.count(m * h)
			# 1 - (-q^2)^b
			coeff = coeff * (Laurent(1) - Laurent({2 * b: (-1) ** b}))
	return coeff


def n_coefficient_e(lam, mu, i, h):
	"""Coefficient of mu in e_i^(k) lam (mu ⊆ lam, k nodes removed)."""
	nodes = _added_nodes(mu, lam)
	if any(pt.residue(c, h) != i for _, c in nodes):
		raise ValueError("removed nodes are not all of residue %d" % i)
	rem_cols = sorted(c for _, c in pt.removable_i_nodes(mu, i, h))
	add_cols = sorted(c for _, c in pt.addable_i_nodes(lam, i, h))
	s = 0
	for _, c in nodes:
		s += sum(1 for x in rem_cols if x > c)
		s -= sum(1 for x in add_cols if x > c)
	if i != 0:
		return q_power(_q_i_exponent(i, h) * s)
	coeff = q_power(s)
	cols = set(c for _, c in nodes)
	for m in range(1, max(cols) // h + 1):
		if m * h in cols and m * h + 1 not in cols:
			b = lam.count(m * h)
			coeff = coeff * (Laurent(1) - Laurent({2 * b: (-1) ** b}))
	return coeff


def _grow_targets(lam, i, k, h):
	"""All h-strict mu ⊇ lam with [mu]\\[lam] equal to k residue-i nodes."""
	rows = list(lam)
	if i == 0:
		rows.append(0)  # at most one new row can appear, and only for i = 0
	opts = [pt._row_add_options(v, i, h) for v in rows]
	out = []

	def go(r, prev, used, acc):
		if used > k:
			return
		if r == len(rows):
			if used == k:
				out.append(tuple(v for v in acc if v))
			return
		if used + 2 * (len(rows) - r) < k:
			return  # cannot reach k any more
		for v in opts[r]:
			if v > prev:
				continue
			if v == prev and v != 0 and v % h != 0:
				continue
			go(r + 1, v, used + (v - rows[r]), acc + [v])

	go(0, float("inf"), 0, [])
	return out


def _shrink_targets(lam, i, k, h):
	"""All h-strict mu ⊆ lam with [lam]\\[mu] equal to k residue-i nodes."""
	opts = [pt._row_strip_options(v, i, h) for v in lam]
	out = []

	def go(r, prev, used, acc):
		if used > k:
			return
		if r == len(lam):
			if used == k:
				out.append(tuple(v for v in acc if v))
			return
		if used + 2 * (len(lam) - r) < k:
			return
		for v in opts[r]:
			if v > prev:
				continue
			if v == prev and v != 0 and v % h != 0:
				continue
			go(r + 1, v, used + (lam[r] - v), acc + [v])

	go(0, float("inf"), 0, [])
	return out


def apply_f(vec, i, k=1):
	"""Divided power f_i^(k) applied to a Fock vector."""
	h = vec.h
	if k == 0:
		return vec
	acc = {}
	for lam, c in vec.terms.items():
		for mu in _grow_targets(lam, i, k, h):
			nc = c * n_coefficient_f(lam, mu, i, h)
			if nc:
				acc[mu] = acc.get(mu, ZERO) + nc
	return FockVector(h, acc)


def apply_e(vec, i, k=1):
	"""Divided power e_i^(k) applied to a Fock vector."""
	h = vec.h
	if k == 0:
		return vec
	acc = {}
	for lam, c in vec.terms.items():
		for mu in _shrink_targets(lam, i, k, h):
			nc = c * n_coefficient_e(lam, mu, i, h)
			if nc:
				acc[mu] = acc.get(mu, ZERO) + nc
	return FockVector(h, acc)


def monomial_apply(seq, h):
	"""Apply a word of divided powers to the empty partition.

	seq is a list of (i, k); the word acts left to right, i.e. the first
	pair is applied first.
	"""
	v = FockVector.basis(h, ())
	for i, k in seq:
		v = apply_f(v, i, k)
		assert v, "monomial killed the vector (bad peel sequence)"
	return v
