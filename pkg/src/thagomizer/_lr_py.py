"""Pure-Python Littlewood-Richardson expansion (fallback for the compiled kernel).

The product ``s_lam * s_mu`` is expanded by enumerating LR skew tableaux of content
``mu`` on top of ``lam``: letters ``0, 1, ...`` are added one at a time, each letter
forming a horizontal strip, subject to the Yamanouchi condition

    #(letter l in rows <= r)  <=  #(letter l-1 in rows < r)

for every row ``r``.  That condition is checked row by row as boxes are placed.
"""


def lr_expand(lam, mu):
    """Return ``{nu: c}`` with ``s_lam * s_mu = sum c * s_nu``."""
    lam = tuple(lam)
    mu = tuple(mu)
    if not mu:
        return {lam: 1}
    if not lam:
        return {mu: 1}

    nrows = len(lam) + len(mu)
    shape = list(lam) + [0] * len(mu)
    # counts[l][r]: number of boxes carrying letter l in row r
    counts = [[0] * nrows for _ in mu]
    out = {}
    nletters = len(mu)

    def place(letter, row, remaining, old_shape, cum_prev, cum_cur):
        # cum_prev: #(letter-1) in rows < row; cum_cur: #letter in rows < row
        if remaining == 0:
            if letter + 1 == nletters:
                key = tuple(p for p in shape if p)
                out[key] = out.get(key, 0) + 1
            else:
                start(letter + 1)
            return
        if row >= nrows:
            return
        if row == 0:
            cap = remaining
        else:
            cap = old_shape[row - 1] - old_shape[row]
            if old_shape[row - 1] == 0:
                return
        if letter > 0:
            lattice = cum_prev - cum_cur
            if lattice < cap:
                cap = lattice
        if cap > remaining:
            cap = remaining
        prev_row = counts[letter - 1][row] if letter > 0 else 0
        for a in range(cap, -1, -1):
            shape[row] += a
            counts[letter][row] = a
            place(letter, row + 1, remaining - a, old_shape, cum_prev + prev_row, cum_cur + a)
            shape[row] -= a
            counts[letter][row] = 0

    def start(letter):
        place(letter, 0, mu[letter], tuple(shape), 0, 0)

    start(0)
    return out
