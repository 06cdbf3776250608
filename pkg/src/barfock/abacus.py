"""The symmetric h-runner abacus.

Positions are all integers; runner(p) is the representative of p mod h in
{-n..n}.  A partition's display has black beads at its parts and at every
negative integer that is not the negative of a part; position 0 holds the
white bead.  A part mh of multiplicity t contributes t beads at mh and t
missing beads at -mh, so occupancy is stored as a *delta* against the
vacuum (all negatives singly occupied): delta(p) = -delta(-p) everywhere.

Removing an h-bar only ever moves beads up their runners, so the core's
display is the fully flushed one; per-runner bead surpluses are invariant
and determine the core outright.
"""

from . import partitions as pt


def runner(p, h):
	n = pt.n_of(h)
	return ((p + n) % h) - n


class AbacusDisplay:
	"""Finite symmetric difference from the vacuum."""

	def __init__(self, h, delta):
		self.h = pt.check_h(h)
		self.delta = {p: v for p, v in delta.items() if v}
		for p, v in self.delta.items():
			if p == 0:
				raise ValueError("position 0 is the white bead")
			if self.delta.get(-p, 0) != -v:
				raise ValueError("display not symmetric at position %d" % p)
			if abs(v) > 1 and p % h != 0:
				raise ValueError("multiplicity only allowed at multiples of h")

	def occupancy(self, p):
		"""Bead count at position p (vacuum has one bead at every p < 0)."""
		base = 1 if p < 0 else 0
		return base + self.delta.get(p, 0)

	def __eq__(self, other):
		return isinstance(other, AbacusDisplay) and \
			(self.h, self.delta) == (other.h, other.delta)

	def runner_surplus(self):
		"""Net bead count per runner, relative to the vacuum."""
		n = pt.n_of(self.h)
		d = {j: 0 for j in range(-n, n + 1)}
		for p, v in self.delta.items():
			d[runner(p, self.h)] += v
		return d

	def grid(self):
		"""Debug rendering: rows of h symbols, 'b' bead / 'n' space / 'x'
		origin, digits for stacked beads.  One vacuum row above and one
		empty row below, like the pictures this is imitating."""
		h, n = self.h, pt.n_of(self.h)
		span = [p for p in self.delta] + [h, -h]
		kmin = min((p + n) // h for p in span) - 1
		kmax = max((p + n) // h for p in span) + 1
		lines = []
		for k in range(kmin, kmax + 1):
			row = []
			for c in range(h):
				p = k * h + c - n
				if p == 0:
					row.append("x")
					continue
				occ = self.occupancy(p)
				if occ == 0:
					row.append("n")
				elif occ == 1:
					row.append("b")
				elif 2 <= occ <= 9:
					row.append(str(occ))
				else:
					row.append("!")  # formal over/under-flow; debug only
			lines.append("".join(row))
		return "\n".join(lines)


def from_partition(lam, h):
	lam = pt.check_partition(lam)
	if not pt.is_h_strict(lam, h):
		raise ValueError("%r is not %d-strict" % (lam, h))
	delta = {}
	for a in lam:
		delta[a] = delta.get(a, 0) + 1
		delta[-a] = delta.get(-a, 0) - 1
	return AbacusDisplay(h, delta)


def to_partition(a):
	parts = []
	for p, v in a.delta.items():
		if p > 0:
			occ = a.occupancy(p)
			if occ < 0 or (occ > 1 and p % a.h != 0):
				raise ValueError("display is not a partition display")
			parts.extend([p] * occ)
	lam = tuple(sorted(parts, reverse=True))
	if from_partition(lam, a.h) != a:
		raise ValueError("display is not a partition display")
	return lam


def core_via_abacus(a):
	"""Flush every runner and read off the resulting partition.

	Bar removals preserve each runner's surplus, so the flushed display --
	the one where every bead sits as high as possible -- depends only on
	those surpluses.  A runner with surplus d > 0 contributes the d lowest
	positive positions on that runner.
	"""
	h = a.h
	d = a.runner_surplus()
	if d[0] != 0:
		raise ValueError("runner 0 out of balance; not a partition display")
	parts = []
	for j, dj in d.items():
		if dj != -d[-j]:
			raise ValueError("asymmetric surplus; not a partition display")
		base = j if j > 0 else h + j  # smallest positive position on runner j
		for m in range(max(dj, 0)):
			parts.append(base + m * h)
	return tuple(sorted(parts, reverse=True))


def bar_positions(lam, block):
	"""The two integers recorded when unmaking a bar-weight-2 partition.

	Every removal order must record the same unordered pair; that is
	asserted here rather than assumed.  Returned as (a, b) with a <= b.
	"""
	h = block.h
	if block.weight != 2 or pt.bar_core(lam, h) != block.core:
		raise ValueError("bar positions only defined on this block's weight-2 members")
	pairs = set()
	for mu, rec1 in pt.remove_h_bar_all(lam, h):
		for nu, rec2 in pt.remove_h_bar_all(mu, h):
			if nu == block.core:
				pairs.add((min(rec1, rec2), max(rec1, rec2)))
	assert len(pairs) == 1, \
		"bar positions depend on removal order for %r: %r" % (lam, pairs)
	return next(iter(pairs))


class BarTag:
	"""Abacus notation for a weight-2 partition: <i,j> or a signed <i>."""

	__slots__ = ("kind", "values")

	def __init__(self, kind, values):
		assert kind in ("pair", "single")
		self.kind = kind
		self.values = tuple(values)

	def __eq__(self, other):
		return isinstance(other, BarTag) and \
			(self.kind, self.values) == (other.kind, other.values)

	def __hash__(self):
		return hash((self.kind, self.values))

	def __str__(self):
		return "<" + ",".join(str(v) for v in self.values) + ">"

	def __repr__(self):
		return "BarTag%s" % self


def pair_tag(i, j):
	lo, hi = min(abs(i), abs(j)), max(abs(i), abs(j))
	return BarTag("pair", (lo, hi))


def single_tag(s):
	return BarTag("single", (s,))


def abacus_notation(lam, block):
	"""Classify a weight-2 partition by where its two bar positions sit."""
	h = block.h
	a, b = bar_positions(lam, block)
	if a == b:
		assert a == h, "equal bar positions can only both be h"
		return pair_tag(0, 0)
	i, j = runner(a, h), runner(b, h)
	if i != j and i != -j:
		return pair_tag(i, j)
	if b == a + h:
		assert i == j
		plain = a not in lam
	else:
		assert a < b and a + b == 2 * h and j == -i and i < 0
		plain = (h - a) in lam
	# a negated runner-0 tag would need a third bar; it cannot happen
	assert plain or i != 0, "unreachable negated <0> tag"
	return single_tag(i if plain else -i)
