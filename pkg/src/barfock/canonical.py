"""Canonical basis of the Fock space, computed the slow honest way.

For each restricted mu (taken in decreasing lex order) we peel mu down to
the empty partition by repeatedly removing all normal i-nodes for the
first residue that has any, rebuild the corresponding monomial of divided
powers applied to the vacuum, and then straighten: while some coefficient
at nu != mu fails to lie in qZ[q], subtract the bar-symmetric multiple of
the already-computed G(nu).  Everything that theory promises along the
way is asserted, not assumed.
"""

import csv
import io

from . import fock
from . import partitions as pt
from .laurent import ONE, symmetric_correction


# ---------------------------------------------------------------------------
# i-signatures
# ---------------------------------------------------------------------------

def _signature_nodes(lam, i, h):
	"""Addable/removable i-nodes merged in ascending column order.

	Entries are (column, row, symbol) with symbol '+' for addable and '-'
	for removable.  The two kinds never share a column; that is load-bearing
	for the reduction and therefore asserted.
	"""
	lam = tuple(lam)
	merged = [(c, r, "+") for r, c in pt.addable_i_nodes(lam, i, h)]
	merged += [(c, r, "-") for r, c in pt.removable_i_nodes(lam, i, h)]
	merged.sort()
	cols = [c for c, _, _ in merged]
	assert len(set(cols)) == len(cols), \
		"addable and removable %d-nodes share a column on %r" % (i, lam)
	return merged


def i_signature(lam, i, h):
	"""The word of +/- symbols, ascending column order."""
	return "".join(sym for _, _, sym in _signature_nodes(lam, i, h))


def _reduce_signature(nodes):
	"""Cancel adjacent +- pairs (stack style); survivors keep their order."""
	stack = []
	for node in nodes:
		if node[2] == "-" and stack and stack[-1][2] == "+":
			stack.pop()
		else:
			stack.append(node)
	return stack


def reduced_i_signature(lam, i, h):
	return "".join(sym for _, _, sym in _reduce_signature(_signature_nodes(lam, i, h)))


def normal_nodes(lam, i, h):
	"""Surviving removable nodes, as (row, col) ascending by column."""
	return [(r, c) for c, r, sym in _reduce_signature(_signature_nodes(lam, i, h))
		if sym == "-"]


def conormal_nodes(lam, i, h):
	"""Surviving addable nodes, as (row, col) ascending by column."""
	return [(r, c) for c, r, sym in _reduce_signature(_signature_nodes(lam, i, h))
		if sym == "+"]


def _add_nodes(lam, nodes, h):
	lengths = list(lam)
	by_row = {}
	for r, c in nodes:
		by_row.setdefault(r, []).append(c)
	for r, cols in sorted(by_row.items()):
		if r == len(lengths) + 1:
			lengths.append(0)
		assert 1 <= r <= len(lengths), "added node in a detached row"
		old = lengths[r - 1]
		assert sorted(cols) == list(range(old + 1, old + len(cols) + 1)), \
			"added nodes do not extend row %d contiguously" % r
		lengths[r - 1] = old + len(cols)
	mu = tuple(v for v in lengths if v)
	mu = pt.check_partition(mu)
	assert pt.is_h_strict(mu, h), "node addition left the h-strict world: %r" % (mu,)
	return mu


def _remove_nodes(lam, nodes, h):
	lengths = list(lam)
	by_row = {}
	for r, c in nodes:
		by_row.setdefault(r, []).append(c)
	for r, cols in by_row.items():
		assert 1 <= r <= len(lengths)
		old = lengths[r - 1]
		assert sorted(cols) == list(range(old - len(cols) + 1, old + 1)), \
			"removed nodes do not truncate row %d contiguously" % r
		lengths[r - 1] = old - len(cols)
	mu = tuple(v for v in lengths if v)
	mu = pt.check_partition(mu)
	assert pt.is_h_strict(mu, h), "node removal left the h-strict world: %r" % (mu,)
	return mu


def psi(lam, i, h):
	"""The signature involution: flip the surviving +/- imbalance."""
	survivors = _reduce_signature(_signature_nodes(lam, i, h))
	norm = [(r, c) for c, r, sym in survivors if sym == "-"]
	conorm = [(r, c) for c, r, sym in survivors if sym == "+"]
	r, s = len(norm), len(conorm)
	if s >= r:
		return _add_nodes(lam, conorm[: s - r], h)
	return _remove_nodes(lam, norm[s - r:], h)


# ---------------------------------------------------------------------------
# peeling and the oracle
# ---------------------------------------------------------------------------

def string_top(mu, h, policy="smallest"):
	"""Remove all normal i-nodes for the first residue that has any.

	Returns (nu, i, k); policy picks whether residues are scanned from 0
	upward or from n downward.  The result must stay restricted.
	"""
	assert mu, "nothing to peel"
	n = pt.n_of(h)
	order = range(n + 1) if policy == "smallest" else range(n, -1, -1)
	for i in order:
		norm = normal_nodes(mu, i, h)
		if norm:
			nu = _remove_nodes(mu, norm, h)
			assert pt.is_restricted(nu, h), \
				"peel step left the restricted world: %r -> %r" % (mu, nu)
			return nu, i, len(norm)
	raise AssertionError("nonempty restricted partition with no normal nodes: %r" % (mu,))


def peel_word(mu, h, policy="smallest"):
	"""The divided-power word rebuilding mu from the vacuum, first letter
	applied first."""
	if not pt.is_restricted(mu, h):
		raise ValueError("only restricted partitions can be peeled: %r" % (mu,))
	word = []
	nu = mu
	while nu:
		nu, i, k = string_top(nu, h, policy)
		word.append((i, k))
	word.reverse()
	return word


class CanonicalBasisMatrix:
	"""Decomposition-number matrix of one block.

	Rows are all block members lex ascending, columns the restricted ones
	lex ascending; entry (lam, mu) is the coefficient of lam in G(mu).
	"""

	__slots__ = ("block", "rows", "cols", "entries")

	def __init__(self, block, rows, cols, entries):
		self.block = block
		self.rows = tuple(tuple(r) for r in rows)
		self.cols = tuple(tuple(c) for c in cols)
		self.entries = tuple(tuple(row) for row in entries)

	def entry(self, lam, mu):
		return self.entries[self.rows.index(tuple(lam))][self.cols.index(tuple(mu))]

	def column(self, mu):
		j = self.cols.index(tuple(mu))
		return fock.FockVector(self.block.h, {
			lam: row[j] for lam, row in zip(self.rows, self.entries)
		})

	def __eq__(self, other):
		return isinstance(other, CanonicalBasisMatrix) and \
			(self.block, self.rows, self.cols, self.entries) == \
			(other.block, other.rows, other.cols, other.entries)

	def to_json_obj(self):
		return {
			"h": self.block.h,
			"core": pt.partition_str(self.block.core),
			"weight": self.block.weight,
			"rows": [pt.partition_str(r) for r in self.rows],
			"cols": [pt.partition_str(c) for c in self.cols],
			"entries": [[str(e) for e in row] for row in self.entries],
		}

	def to_csv(self):
		buf = io.StringIO()
		w = csv.writer(buf, lineterminator="\n")
		w.writerow([""] + [pt.partition_str(c) for c in self.cols])
		for lam, row in zip(self.rows, self.entries):
			w.writerow([pt.partition_str(lam)] + [str(e) for e in row])
		return buf.getvalue()

	def to_text(self):
		"""Aligned table; zero entries print as a centred dot."""
		head = [""] + [pt.partition_str(c) for c in self.cols]
		body = [
			[pt.partition_str(lam)] + [str(e) if e else "·" for e in row]
			for lam, row in zip(self.rows, self.entries)
		]
		widths = [max(len(line[j]) for line in [head] + body) for j in range(len(head))]
		lines = []
		for line in [head] + body:
			lines.append("  ".join(cell.rjust(w) for cell, w in zip(line, widths)).rstrip())
		return "\n".join(lines)


_CACHE = {}


def canonical_basis(block, peel_policy="smallest"):
	"""The block's canonical-basis matrix, straightened from peel monomials.

	Columns are driven in decreasing lex order, but a correction can point
	at a lex-smaller restricted column (which peel word a partition gets
	depends on the policy), so columns are computed by memoised recursion:
	straightening mu may first compute G(nu) for the column it needs.  A
	genuine dependency cycle is a hard error.

	The pivot is the lex-LEAST position with a coefficient outside qZ[q]:
	the residue vector is a bar-invariant combination of canonical columns,
	and its lex-least dirty position is exactly the lex-least column in
	that combination, with the whole bar-invariant multiplier as its
	coefficient.  (The lex-greatest dirty position can sit at a
	non-restricted partition — a shadow of corrections below it — so it is
	not a usable pivot.)
	"""
	key = (block, peel_policy)
	if key in _CACHE:
		return _CACHE[key]
	h = block.h
	parts = pt.enumerate_block(block)
	members = set(parts)
	restricted = [p for p in parts if pt.is_restricted(p, h)]
	restricted_set = set(restricted)
	content = pt.h_content(parts[0], h) if parts else None
	G = {}
	in_progress = set()

	def column(mu):
		if mu in G:
			return G[mu]
		assert mu not in in_progress, \
			"correction columns form a dependency cycle at %r" % (mu,)
		in_progress.add(mu)
		vec = fock.monomial_apply(peel_word(mu, h, peel_policy), h)
		lead = vec.coefficient(mu)
		assert (lead - ONE).divisible_by_q(), \
			"peel monomial not unitriangular at %r: %s" % (mu, lead)
		guard = len(parts) * (len(parts) + 1)
		while True:
			bad = None
			for nu in sorted(vec.support()):
				if nu != mu and not vec.coefficient(nu).divisible_by_q():
					bad = nu
					break
			if bad is None:
				break
			if bad not in restricted_set:
				raise AssertionError(
					"correction needed at non-restricted %r while straightening %r"
					% (bad, mu))
			vec = vec - column(bad).scale(symmetric_correction(vec.coefficient(bad)))
			guard -= 1
			assert guard > 0, "straightening loop failed to terminate at %r" % (mu,)
		assert vec.coefficient(mu) == ONE, "leading coefficient of %r is not 1" % (mu,)
		for lam, c in vec.items():
			assert lam in members, \
				"G(%r) leaks outside its block at %r" % (mu, lam)
			assert pt.h_content(lam, h) == content
			if lam != mu:
				assert c.divisible_by_q(), \
					"off-diagonal entry at %r not in qZ[q]" % (lam,)
				assert pt.strictly_dominates(lam, mu), \
					"support of G(%r) fails dominance at %r" % (mu, lam)
		in_progress.discard(mu)
		G[mu] = vec
		return vec

	for mu in sorted(restricted, reverse=True):
		column(mu)
	entries = [[G[mu].coefficient(lam) for mu in restricted] for lam in parts]
	out = CanonicalBasisMatrix(block, parts, restricted, entries)
	_CACHE[key] = out
	return out
