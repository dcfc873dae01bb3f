"""Porter suffix-stripping stemmer.

Follows the reference implementation distributed by Martin Porter, including
its two small departures from the 1980 description (``bli -> ble`` and
``logi -> log`` in step 2), so that output agrees with the published
``voc.txt``/``output.txt`` pair.
"""

from functools import lru_cache

_STEP2 = {
    "a": (("ational", "ate"), ("tional", "tion")),
    "c": (("enci", "ence"), ("anci", "ance")),
    "e": (("izer", "ize"),),
    "l": (("bli", "ble"), ("alli", "al"), ("entli", "ent"), ("eli", "e"), ("ousli", "ous")),
    "o": (("ization", "ize"), ("ation", "ate"), ("ator", "ate")),
    "s": (("alism", "al"), ("iveness", "ive"), ("fulness", "ful"), ("ousness", "ous")),
    "t": (("aliti", "al"), ("iviti", "ive"), ("biliti", "ble")),
    "g": (("logi", "log"),),
}

_STEP3 = {
    "e": (("icate", "ic"), ("ative", ""), ("alize", "al")),
    "i": (("iciti", "ic"),),
    "l": (("ical", "ic"), ("ful", "")),
    "s": (("ness", ""),),
}

_STEP4 = {
    "a": ("al",),
    "c": ("ance", "ence"),
    "e": ("er",),
    "i": ("ic",),
    "l": ("able", "ible"),
    "n": ("ant", "ement", "ment", "ent"),
    "o": ("ion", "ou"),
    "s": ("ism",),
    "t": ("ate", "iti"),
    "u": ("ous",),
    "v": ("ive",),
    "z": ("ize",),
}


class _Word:
    """Mutable buffer b[0..k] with the helper predicates of the algorithm.

    ``j`` marks the end of the stem left after a suffix matched by
    :meth:`ends`.
    """

    def __init__(self, word):
        self.b = list(word)
        self.k = len(word) - 1
        self.j = 0

    def cons(self, i):
        ch = self.b[i]
        if ch in "aeiou":
            return False
        if ch == "y":
            return i == 0 or not self.cons(i - 1)
        return True

    def m(self):
        """Number of VC sequences in b[0..j]."""
        n = 0
        i = 0
        j = self.j
        while True:
            if i > j:
                return n
            if not self.cons(i):
                break
            i += 1
        i += 1
        while True:
            while True:
                if i > j:
                    return n
                if self.cons(i):
                    break
                i += 1
            i += 1
            n += 1
            while True:
                if i > j:
                    return n
                if not self.cons(i):
                    break
                i += 1
            i += 1

    def vowel_in_stem(self):
        return any(not self.cons(i) for i in range(self.j + 1))

    def double_c(self, j):
        return j >= 1 and self.b[j] == self.b[j - 1] and self.cons(j)

    def cvc(self, i):
        if i < 2 or not self.cons(i) or self.cons(i - 1) or not self.cons(i - 2):
            return False
        return self.b[i] not in "wxy"

    def ends(self, s):
        n = len(s)
        if n > self.k + 1:
            return False
        if "".join(self.b[self.k - n + 1 : self.k + 1]) != s:
            return False
        self.j = self.k - n
        return True

    def set_to(self, s):
        self.b[self.j + 1 : self.k + 1] = list(s)
        self.k = self.j + len(s)

    def replace(self, s):
        if self.m() > 0:
            self.set_to(s)

    def __str__(self):
        return "".join(self.b[: self.k + 1])


def _step1ab(w):
    if w.b[w.k] == "s":
        if w.ends("sses"):
            w.k -= 2
        elif w.ends("ies"):
            w.set_to("i")
        elif w.k >= 1 and w.b[w.k - 1] != "s":
            w.k -= 1
    if w.ends("eed"):
        if w.m() > 0:
            w.k -= 1
    elif (w.ends("ed") or w.ends("ing")) and w.vowel_in_stem():
        w.k = w.j
        if w.ends("at"):
            w.set_to("ate")
        elif w.ends("bl"):
            w.set_to("ble")
        elif w.ends("iz"):
            w.set_to("ize")
        elif w.double_c(w.k):
            w.k -= 1
            if w.b[w.k] in "lsz":
                w.k += 1
        else:
            w.j = w.k
            if w.m() == 1 and w.cvc(w.k):
                w.set_to("e")


def _step1c(w):
    if w.ends("y") and w.vowel_in_stem():
        w.b[w.k] = "i"


def _table_step(w, table, key):
    # first suffix that matches wins, whether or not the measure allows the rewrite
    for suffix, repl in table.get(key, ()):
        if w.ends(suffix):
            w.replace(repl)
            return


def _step4(w):
    for suffix in _STEP4.get(w.b[w.k - 1], ()):
        if w.ends(suffix):
            if suffix == "ion" and not (w.j >= 0 and w.b[w.j] in "st"):
                continue
            break
    else:
        return
    if w.m() > 1:
        w.k = w.j


def _step5(w):
    w.j = w.k
    if w.b[w.k] == "e":
        a = w.m()
        if a > 1 or (a == 1 and not w.cvc(w.k - 1)):
            w.k -= 1
    if w.b[w.k] == "l" and w.double_c(w.k) and w.m() > 1:
        w.k -= 1


@lru_cache(maxsize=65536)
def porter_stem(word: str) -> str:
    """Stem a single lowercase word with the Porter algorithm.

    Words of one or two letters are returned unchanged.

    >>> porter_stem("caresses")
    'caress'
    >>> porter_stem("running")
    'run'
    """
    if len(word) <= 2:
        return word
    w = _Word(word)
    _step1ab(w)
    if w.k > 0:
        _step1c(w)
        _table_step(w, _STEP2, w.b[w.k - 1])
        _table_step(w, _STEP3, w.b[w.k])
        _step4(w)
        _step5(w)
    return str(w)
