"""Partition combinatorics for the odd-bar setting.

Partitions are plain tuples of weakly decreasing positive integers.  The
ambient odd integer h = 2n+1 is threaded through as a plain int; every
column of the Young diagram carries a residue in {0..n}, computed from the
repeating pattern 0 1 2 .. n .. 2 1 0 0 1 2 ...

Only multiples of h may repeat in an "h-strict" partition, and the
"restricted" ones (bounded gaps) are the labels of canonical-basis columns.
"""

from dataclasses import dataclass

LESS, EQUAL, GREATER, INCOMPARABLE = -1, 0, 1, 2


def check_h(h):
	if not (isinstance(h, int) and h >= 3 and h % 2 == 1):
		raise ValueError("h must be an odd integer >= 3, got %r" % (h,))
	return h


def n_of(h):
	return (h - 1) // 2


def check_partition(lam):
	lam = tuple(lam)
	for r in range(len(lam)):
		if not (isinstance(lam[r], int) and lam[r] > 0):
			raise ValueError("parts must be positive integers: %r" % (lam,))
		if r + 1 < len(lam) and lam[r] < lam[r + 1]:
			raise ValueError("parts must weakly decrease: %r" % (lam,))
	return lam


def size(lam):
	return sum(lam)


def is_strict(lam):
	return all(lam[r] > lam[r + 1] for r in range(len(lam) - 1))


def is_h_strict(lam, h):
	"""Repeats allowed only at multiples of h."""
	return all(
		lam[r] > lam[r + 1] or lam[r] % h == 0
		for r in range(len(lam) - 1)
	)


def is_restricted(lam, h):
	"""Successive gaps bounded by h, with equality allowed only off 0 mod h.

	The condition is applied for every row r including the one past the end
	(so a single part h is already not restricted).
	"""
	if not is_h_strict(lam, h):
		raise ValueError("%r is not %d-strict" % (lam, h))
	for r in range(len(lam)):
		nxt = lam[r + 1] if r + 1 < len(lam) else 0
		if nxt > lam[r] - h:
			continue
		if nxt == lam[r] - h and lam[r] % h != 0:
			continue
		return False
	return True


def residue(c, h):
	"""Residue of column c: the smaller of (c-1) mod h and (-c) mod h."""
	return min((c - 1) % h, (-c) % h)


# ---------------------------------------------------------------------------
# removable / addable i-nodes
#
# Stripping or adding i-nodes acts on each row's right edge.  Since three
# consecutive columns never share a residue, each row changes by at most two
# nodes, and a new row can only ever be a single node in column 1 (residue 0).
# The removable set is the difference against the *smallest* h-strict
# subpartition reachable this way, the addable set against the *largest*
# h-strict superpartition; both optima are required to be unique.
# ---------------------------------------------------------------------------

def _row_strip_options(length, i, h):
	"""New lengths a row of the given length may shrink to (all i-columns)."""
	opts = [length]
	if length >= 1 and residue(length, h) == i:
		opts.append(length - 1)
		if length >= 2 and residue(length - 1, h) == i:
			opts.append(length - 2)
	return opts


def _row_add_options(length, i, h):
	opts = [length]
	if residue(length + 1, h) == i:
		opts.append(length + 1)
		if residue(length + 2, h) == i:
			opts.append(length + 2)
	return opts


def _choose_rows(opts_per_row, h, minimise):
	"""Pick one value per row (weakly decreasing, repeats only at mult. of h),
	optimising the total.  Returns the unique optimising vector.

	Plain recursion with memoisation on (row, previous value); the option
	lists have at most three entries so this is tiny.
	"""
	rows = len(opts_per_row)
	memo = {}

	def go(r, prev):
		# returns (best_total, count_of_optima, choice_vector)
		if r == rows:
			return (0, 1, ())
		key = (r, prev)
		if key in memo:
			return memo[key]
		best = None
		for v in opts_per_row[r]:
			if v > prev:
				continue
			if v == prev and v > 0 and v % h != 0:
				continue
			sub = go(r + 1, v)
			if sub is None:
				continue
			total = v + sub[0]
			if best is None or (minimise and total < best[0]) or (not minimise and total > best[0]):
				best = (total, sub[1], (v,) + sub[2])
			elif total == best[0]:
				best = (best[0], best[1] + sub[1], best[2])
		memo[key] = best
		return best

	result = go(0, None if rows == 0 else max(max(o) for o in opts_per_row) + 1)
	assert result is not None, "no admissible row assignment"
	assert result[1] == 1, "optimum not unique: %r" % (opts_per_row,)
	return result[2]


def removable_i_nodes(lam, i, h):
	"""Nodes removed in passing to the smallest h-strict subpartition whose
	complement consists of i-nodes; increasing column order, ties by row."""
	lam = tuple(lam)
	if not lam:
		return []
	opts = [_row_strip_options(lam[r], i, h) for r in range(len(lam))]
	# the smallest subpartition has the minimal total of new row lengths
	chosen = _choose_rows(opts, h, minimise=True)
	nodes = []
	for r in range(len(lam)):
		for c in range(chosen[r] + 1, lam[r] + 1):
			nodes.append((r + 1, c))
	nodes.sort(key=lambda rc: (rc[1], rc[0]))
	return nodes


def addable_i_nodes(lam, i, h):
	"""Dual of removable_i_nodes: the difference against the largest h-strict
	superpartition reachable by adding i-nodes."""
	lam = tuple(lam)
	lengths = list(lam)
	if i == 0:
		lengths.append(0)  # at most one new row, necessarily a single node
	opts = [_row_add_options(v, i, h) for v in lengths]
	chosen = _choose_rows(opts, h, minimise=False)
	nodes = []
	for r in range(len(lengths)):
		for c in range(lengths[r] + 1, chosen[r] + 1):
			nodes.append((r + 1, c))
	nodes.sort(key=lambda rc: (rc[1], rc[0]))
	return nodes


def h_content(lam, h):
	"""Residue counts of all nodes, as a tuple indexed by residue 0..n."""
	counts = [0] * (n_of(h) + 1)
	for part in lam:
		for c in range(1, part + 1):
			counts[residue(c, h)] += 1
	return tuple(counts)


# ---------------------------------------------------------------------------
# h-bar removal, cores and weights
# ---------------------------------------------------------------------------

def remove_h_bar_all(lam, h):
	"""All single h-bar removals, as (partition, recorded value) pairs.

	Two moves: replace a part a >= h by a - h (recording a; a part equal to
	h disappears and records h), or delete two parts summing to h (recording
	the larger).  Results must again be h-strict.
	"""
	lam = tuple(lam)
	out = set()
	parts = list(lam)
	for a in sorted(set(parts), reverse=True):
		if a >= h:
			rest = list(parts)
			rest.remove(a)
			if a > h:
				rest.append(a - h)
			mu = tuple(sorted(rest, reverse=True))
			if is_h_strict(mu, h):
				out.add((mu, a))
	for a in range(1, n_of(h) + 1):
		if a in parts and (h - a) in parts:
			rest = list(parts)
			rest.remove(a)
			rest.remove(h - a)
			mu = tuple(sorted(rest, reverse=True))
			if is_h_strict(mu, h):
				out.add((mu, h - a))
	return sorted(out)


def bar_core(lam, h):
	from . import abacus
	return abacus.core_via_abacus(abacus.from_partition(lam, h))


def bar_weight(lam, h):
	core = bar_core(lam, h)
	excess = size(lam) - size(core)
	assert excess % h == 0, (lam, core)
	return excess // h


def is_core(tau, h):
	return bar_weight(tau, h) == 0


# ---------------------------------------------------------------------------
# orders
# ---------------------------------------------------------------------------

def compare_dominance(lam, mu):
	"""Dominance comparison via prefix sums; the partitions must have equal
	size (anything else is a block-mixing bug)."""
	if sum(lam) != sum(mu):
		raise ValueError("dominance needs equal sizes: %r vs %r" % (lam, mu))
	seen_less = seen_greater = False
	acc_l = acc_m = 0
	for r in range(max(len(lam), len(mu))):
		acc_l += lam[r] if r < len(lam) else 0
		acc_m += mu[r] if r < len(mu) else 0
		if acc_l < acc_m:
			seen_less = True
		elif acc_l > acc_m:
			seen_greater = True
	if seen_less and seen_greater:
		return INCOMPARABLE
	if seen_less:
		return LESS
	if seen_greater:
		return GREATER
	return EQUAL


def dominates(lam, mu):
	"""lam dominates mu (weakly)."""
	return compare_dominance(lam, mu) in (GREATER, EQUAL)


def strictly_dominates(lam, mu):
	return compare_dominance(lam, mu) == GREATER


def compare_lex(lam, mu):
	lam, mu = tuple(lam), tuple(mu)
	if lam == mu:
		return EQUAL
	return LESS if lam < mu else GREATER


def compare_colex(lam, mu):
	"""lam < mu iff at the last difference (reading parts from the tail,
	padded with zeros) lam has the *larger* part."""
	lam, mu = tuple(lam), tuple(mu)
	if lam == mu:
		return EQUAL
	k = max(len(lam), len(mu))
	a = (0,) * (k - len(lam)) + lam[::-1]
	b = (0,) * (k - len(mu)) + mu[::-1]
	for x, y in zip(a, b):
		if x != y:
			return LESS if x > y else GREATER
	raise AssertionError("unreachable")


def colex_key(lam):
	"""Sort key: sorted(partitions, key=colex_key) is colex ascending."""
	return _ColexKey(tuple(lam))


class _ColexKey:
	__slots__ = ("p",)

	def __init__(self, p):
		self.p = p

	def __lt__(self, other):
		return compare_colex(self.p, other.p) == LESS

	def __eq__(self, other):
		return self.p == other.p


# ---------------------------------------------------------------------------
# multiset part operations
# ---------------------------------------------------------------------------

def union(lam, mu):
	return tuple(sorted(list(lam) + list(mu), reverse=True))


def intersect(lam, mu):
	rest = list(mu)
	out = []
	for a in lam:
		if a in rest:
			out.append(a)
			rest.remove(a)
	return tuple(sorted(out, reverse=True))


def subtract(lam, mu):
	rest = list(lam)
	for a in mu:
		if a not in rest:
			raise ValueError("cannot subtract %r from %r" % (mu, lam))
		rest.remove(a)
	return tuple(sorted(rest, reverse=True))


def count_between(tau, x, y):
	"""Number of parts strictly between x and y."""
	if not x < y:
		raise ValueError("need x < y")
	return sum(1 for a in tau if x < a < y)


def gamma(tau, h):
	"""Parts of tau strictly between 0 and h."""
	return count_between(tau, 0, h) if tau else 0


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def enumerate_h_strict(m, h):
	"""All h-strict partitions of m, lexicographically ascending."""
	out = []

	def build(remaining, maxpart, acc):
		if remaining == 0:
			out.append(tuple(acc))
			return
		for a in range(min(remaining, maxpart), 0, -1):
			if acc and acc[-1] == a and a % h != 0:
				continue
			acc.append(a)
			build(remaining - a, a, acc)
			acc.pop()

	build(m, m, [])
	out.sort()
	return out


def enumerate_cores(h, max_size):
	"""All bar-cores of size at most max_size, by size then lex."""
	out = []
	for m in range(max_size + 1):
		out.extend(t for t in enumerate_h_strict(m, h) if is_core(t, h))
	return out


@dataclass(frozen=True)
class BlockId:
	"""A combinatorial block: ambient h, a bar-core, and a bar-weight."""
	h: int
	core: tuple
	weight: int

	def __post_init__(self):
		check_h(self.h)
		object.__setattr__(self, "core", check_partition(self.core))
		if bar_weight(self.core, self.h) != 0:
			raise ValueError("%r is not a %d-bar-core" % (self.core, self.h))
		if self.weight < 0:
			raise ValueError("negative weight")

	@property
	def n(self):
		return n_of(self.h)

	def __str__(self):
		return "h=%d core=%s w=%d" % (self.h, partition_str(self.core), self.weight)


def enumerate_block(block):
	"""All h-strict partitions with the block's core and weight, lex
	ascending.  Plain filtering of the size-m generator; the scales this
	library runs at make anything cleverer pointless."""
	m = size(block.core) + block.h * block.weight
	if m == 0:
		return [()]
	return [
		lam for lam in enumerate_h_strict(m, block.h)
		if bar_core(lam, block.h) == block.core
	]


# ---------------------------------------------------------------------------
# text forms
# ---------------------------------------------------------------------------

def partition_str(lam):
	return "(" + ",".join(str(a) for a in lam) + ")"


def parse_partition(text):
	"""Accepts (9,6,3,1), bare 9,6,3,1, and () or - or empty for ()."""
	text = text.strip()
	if text.startswith("(") and text.endswith(")"):
		text = text[1:-1].strip()
	elif "(" in text or ")" in text:
		raise ValueError("partitions look like (9,6,3,1); got %r" % text)
	if not text or text == "-":
		return ()
	try:
		parts = tuple(int(tok) for tok in text.split(","))
	except ValueError:
		raise ValueError("partitions look like (9,6,3,1); got %r" % text)
	return check_partition(parts)
