"""Independent reference for the frozen values in the C++ tests.

Re-implements the pinned generator (splitmix64 seeding, xoshiro256**),
rejection sampling, partial Fisher-Yates, GF(q^2) as polynomials modulo the
Conway polynomial, the Hermitian curve, and exhaustive HOPI optimization.
Run with python3; prints the values the tests assert.
"""
import itertools

M64 = (1 << 64) - 1


def splitmix64(state):
    state = (state + 0x9E3779B97F4A7C15) & M64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & M64
    return state, z ^ (z >> 31)


def rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & M64


class Rng:
    def __init__(self, seed):
        self.s = []
        st = seed
        for _ in range(4):
            st, v = splitmix64(st)
            self.s.append(v)

    def next(self):
        s = self.s
        result = (rotl((s[1] * 5) & M64, 7) * 9) & M64
        t = (s[1] << 17) & M64
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = rotl(s[3], 45)
        return result

    def below(self, bound):
        threshold = ((1 << 64) - bound) % bound
        while True:
            x = self.next()
            if x >= threshold:
                return x % bound


def sample(pool, count, rng):
    pool = list(pool)
    for j in range(count):
        pick = j + rng.below(len(pool) - j)
        pool[j], pool[pick] = pool[pick], pool[j]
    return pool[:count]


CONWAY = {2: (2, 2, [1, 1, 1]), 3: (3, 2, [2, 2, 1]), 4: (2, 4, [1, 1, 0, 0, 1])}


class GF:
    def __init__(self, q):
        self.p, self.m, self.mod = CONWAY[q]
        self.q = q
        self.order = self.p ** self.m

    def digits(self, a):
        return [(a // self.p ** i) % self.p for i in range(self.m)]

    def index(self, d):
        return sum(c * self.p ** i for i, c in enumerate(d))

    def add(self, a, b):
        return self.index([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def mul(self, a, b):
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        for deg in range(len(prod) - 1, self.m - 1, -1):
            c = prod[deg]
            if c:
                for i in range(self.m + 1):
                    prod[deg - self.m + i] = (prod[deg - self.m + i] - c * self.mod[i]) % self.p
        return self.index(prod[: self.m])

    def pow(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r


def curve_points(f):
    q = f.q
    return [(x, y) for x in range(f.order) for y in range(f.order)
            if f.add(f.pow(y, q), y) == f.pow(x, q + 1)]


def basis(q, t):
    mons = [(a, b) for b in range(q) for a in range(t + 1) if a * q + b * (q + 1) <= t]
    return sorted(mons, key=lambda m: (m[0] * q + m[1] * (q + 1), m[1]))


def encode(f, pts, mons, msg):
    out = []
    for x, y in pts:
        acc = 0
        for (a, b), c in zip(mons, msg):
            acc = f.add(acc, f.mul(c, f.mul(f.pow(x, a), f.pow(y, b))))
        out.append(acc)
    return out


def random_sets(f, n, r, seed):
    rng = Rng(seed)
    return [sorted(sample(range(f.order), r, rng)) for _ in range(n)]


def planted_sets(f, word, r, seed):
    rng = Rng(seed)
    sets = []
    for c in word:
        rest = [e for e in range(f.order) if e != c]
        s = sample(rest, r - 1, rng) + [c]
        sets.append(sorted(s))
    return sets


def brute(f, pts, mons, sets):
    best, arg = -1, None
    for msg in itertools.product(range(f.order), repeat=len(mons)):
        w = encode(f, pts, mons, msg)
        s = sum(1 for i, v in enumerate(w) if v in sets[i])
        if s > best:
            best, arg = s, msg
    return best, arg


def min_distance(f, pts, mons):
    best = len(pts)
    for msg in itertools.product(range(f.order), repeat=len(mons)):
        if any(msg):
            w = encode(f, pts, mons, msg)
            best = min(best, sum(1 for v in w if v))
    return best


if __name__ == "__main__":
    r = Rng(0)
    print("xoshiro seed 0:", [r.next() for _ in range(4)])
    r = Rng(12345)
    print("below(10) seed 12345:", [r.below(10) for _ in range(8)])
    f = GF(2)
    pts = curve_points(f)
    print("q=2 points:", pts)
    mons = basis(2, 4)
    sets = random_sets(f, 8, 2, 1)
    print("q=2 t=4 r=2 seed=1 sets:", sets)
    print("  zero-message score:", sum(1 for s in sets if 0 in s))
    print("  brute optimum:", brute(f, pts, mons, sets))
    word = encode(f, pts, mons, [0, 1, 0, 0])
    psets = planted_sets(f, word, 2, 7)
    print("planted seed 7 e2 sets:", psets, "optimum:", brute(f, pts, mons, psets))
    for t in range(1, 8):
        print("q=2 t=%d d_min=%d" % (t, min_distance(f, pts, basis(2, t))))
