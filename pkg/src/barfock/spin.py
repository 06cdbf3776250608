"""Predicted reduced decomposition numbers for spin representations.

Evaluating a canonical-basis entry at q = 1 and scaling by 2^(x_h/2),
where x_h is a small statistic of the row partition, conjecturally gives
the reduced decomposition number.  Everything here is exact: predictions
are (mantissa, half_power) pairs meaning mantissa * 2^(half_power/2), and
an odd half_power is flagged rather than approximated.
"""

from dataclasses import dataclass

from . import partitions as pt


def parity(lam):
	"""'even' or 'odd' by the number of positive even parts."""
	return "even" if sum(1 for a in lam if a % 2 == 0) % 2 == 0 else "odd"


def h_parity(lam, h):
	"""'h-even' or 'h-odd' by the number of nodes of nonzero residue."""
	content = pt.h_content(lam, h)
	nonzero = sum(content[1:])
	return "h-even" if nonzero % 2 == 0 else "h-odd"


def n_h(lam, h):
	"""Number of parts divisible by h."""
	return sum(1 for a in lam if a % h == 0)


def x_h(lam, h):
	base = n_h(lam, h)
	even = parity(lam) == "even"
	heven = h_parity(lam, h) == "h-even"
	if even and heven:
		return base
	if even:
		return base + 1
	if heven:
		return base - 1
	return base


@dataclass(frozen=True)
class SpinPrediction:
	lam: tuple
	mu: tuple
	d_at_one: int
	x: int
	mantissa: int
	half_power: int

	@property
	def half_power_odd(self):
		return self.half_power % 2 == 1

	def to_json_obj(self):
		return {
			"lam": pt.partition_str(self.lam),
			"mu": pt.partition_str(self.mu),
			"d_at_one": self.d_at_one,
			"x_h": self.x,
			"mantissa": self.mantissa,
			"half_power": self.half_power,
			"half_power_odd": self.half_power_odd,
		}


def predict_reduced(lam, mu, d, h):
	"""Prediction for one matrix entry d (a Laurent polynomial)."""
	lam, mu = tuple(lam), tuple(mu)
	value = d.eval_at_one()
	x = x_h(lam, h)
	if value == 0:
		return SpinPrediction(lam, mu, 0, x, 0, 0)
	return SpinPrediction(lam, mu, value, x, value, x)


def predict_matrix(matrix):
	"""Predictions for every entry of a decomposition matrix, row-major."""
	h = matrix.block.h
	out = []
	for lam, row in zip(matrix.rows, matrix.entries):
		for mu, d in zip(matrix.cols, row):
			out.append(predict_reduced(lam, mu, d, h))
	return out
