# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled permutation kernel.

Same API and semantics as ``fnq._pykernel``; permutations cross the boundary
as tuples of 0-based images and are stored internally as flat ``uint16``
rows indexed by an open-addressing hash table.
"""

from array import array

from libc.stdint cimport int32_t, uint16_t, uint64_t
from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memcmp, memcpy, memset

ctypedef uint16_t pt_t


cdef inline uint64_t _row_hash(const pt_t* p, int degree) noexcept nogil:
    cdef uint64_t h = 1469598103934665603ULL
    cdef int k
    for k in range(degree):
        h ^= p[k]
        h *= 1099511628211ULL
    return h ^ (h >> 29)


cdef class _Store:
    cdef pt_t* data
    cdef Py_ssize_t count
    cdef Py_ssize_t capacity
    cdef int degree
    cdef int32_t* slots
    cdef Py_ssize_t nslots

    def __cinit__(self, int degree, Py_ssize_t hint=1024):
        if degree < 1 or degree > 65535:
            raise ValueError("permutation degree must be in 1..65535")
        self.degree = degree
        self.count = 0
        self.capacity = max(hint, 16)
        self.data = <pt_t*> malloc(self.capacity * degree * sizeof(pt_t))
        self.nslots = 64
        while self.nslots < 2 * self.capacity:
            self.nslots <<= 1
        self.slots = <int32_t*> malloc(self.nslots * sizeof(int32_t))
        if self.data == NULL or self.slots == NULL:
            raise MemoryError()
        memset(self.slots, 0xff, self.nslots * sizeof(int32_t))

    def __dealloc__(self):
        free(self.data)
        free(self.slots)

    cdef inline pt_t* row(self, Py_ssize_t i) noexcept:
        return self.data + i * self.degree

    cdef Py_ssize_t find(self, const pt_t* p) noexcept:
        cdef Py_ssize_t mask = self.nslots - 1
        cdef Py_ssize_t s = <Py_ssize_t> (_row_hash(p, self.degree) & mask)
        cdef int32_t idx
        while True:
            idx = self.slots[s]
            if idx < 0:
                return -1
            if memcmp(self.row(idx), p, self.degree * sizeof(pt_t)) == 0:
                return idx
            s = (s + 1) & mask

    cdef void _insert_slot(self, Py_ssize_t idx) noexcept:
        cdef Py_ssize_t mask = self.nslots - 1
        cdef Py_ssize_t s = <Py_ssize_t> (_row_hash(self.row(idx), self.degree) & mask)
        while self.slots[s] >= 0:
            s = (s + 1) & mask
        self.slots[s] = <int32_t> idx

    cdef int _grow(self) except -1:
        cdef Py_ssize_t i
        cdef pt_t* nd
        cdef int32_t* ns
        self.capacity *= 2
        nd = <pt_t*> realloc(self.data, self.capacity * self.degree * sizeof(pt_t))
        if nd == NULL:
            raise MemoryError()
        self.data = nd
        if 2 * self.capacity > self.nslots:
            free(self.slots)
            self.nslots *= 2
            while self.nslots < 2 * self.capacity:
                self.nslots <<= 1
            ns = <int32_t*> malloc(self.nslots * sizeof(int32_t))
            if ns == NULL:
                raise MemoryError()
            self.slots = ns
            memset(self.slots, 0xff, self.nslots * sizeof(int32_t))
            for i in range(self.count):
                self._insert_slot(i)
        return 0

    cdef Py_ssize_t add(self, const pt_t* p) except -1:
        if self.count == self.capacity:
            self._grow()
        memcpy(self.row(self.count), p, self.degree * sizeof(pt_t))
        self._insert_slot(self.count)
        self.count += 1
        return self.count - 1

    cdef Py_ssize_t lookup(self, const pt_t* p) except -2:
        cdef Py_ssize_t idx = self.find(p)
        if idx < 0:
            raise KeyError("permutation not in the element list")
        return idx

    def as_tuples(self):
        cdef Py_ssize_t i
        cdef int k
        cdef pt_t* r
        out = []
        for i in range(self.count):
            r = self.row(i)
            out.append(tuple([r[k] for k in range(self.degree)]))
        return out


cdef pt_t* _to_rows(seq, int degree) except NULL:
    cdef Py_ssize_t n = len(seq)
    cdef pt_t* buf = <pt_t*> malloc(max(n, 1) * degree * sizeof(pt_t))
    cdef Py_ssize_t i
    cdef int k
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        p = seq[i]
        if len(p) != degree:
            free(buf)
            raise ValueError("permutations of mixed degree")
        for k in range(degree):
            buf[i * degree + k] = <pt_t> p[k]
    return buf


cdef _Store _store_from(perms):
    if not perms:
        raise ValueError("empty element list")
    cdef int degree = len(perms[0])
    cdef _Store st = _Store(degree, len(perms))
    cdef pt_t* rows = _to_rows(perms, degree)
    cdef Py_ssize_t i
    try:
        for i in range(len(perms)):
            st.add(rows + i * degree)
    finally:
        free(rows)
    return st


def perm_closure(gens, int degree, Py_ssize_t cap):
    cdef Py_ssize_t ngens = len(gens)
    cdef pt_t* g = _to_rows(gens, degree)
    cdef pt_t* tmp = <pt_t*> malloc(degree * sizeof(pt_t))
    cdef _Store st = _Store(degree, 1024)
    cdef Py_ssize_t i, gi, idx
    cdef int k
    cdef pt_t* p
    cdef pt_t* q
    cdef bint complete = True
    parents = [-1]
    gen_index = [-1]
    try:
        if tmp == NULL:
            raise MemoryError()
        for k in range(degree):
            tmp[k] = <pt_t> k
        st.add(tmp)
        i = 0
        while i < st.count and complete:
            for gi in range(ngens):
                p = st.row(i)
                q = g + gi * degree
                for k in range(degree):
                    tmp[k] = q[p[k]]
                idx = st.find(tmp)
                if idx < 0:
                    if st.count >= cap:
                        complete = False
                        break
                    st.add(tmp)
                    parents.append(i)
                    gen_index.append(gi)
            i += 1
    finally:
        free(g)
        free(tmp)
    return st.as_tuples(), parents, gen_index, bool(complete)


def class_labels(perms, gens):
    cdef _Store st = _store_from(perms)
    cdef int degree = st.degree
    cdef Py_ssize_t n = st.count, ngens = len(gens)
    cdef pt_t* g = _to_rows(gens, degree)
    cdef pt_t* ginv = <pt_t*> malloc(max(ngens, 1) * degree * sizeof(pt_t))
    cdef pt_t* tmp = <pt_t*> malloc(degree * sizeof(pt_t))
    cdef int32_t* labels = <int32_t*> malloc(max(n, 1) * sizeof(int32_t))
    cdef int32_t* stack = <int32_t*> malloc(max(n, 1) * sizeof(int32_t))
    cdef Py_ssize_t start, top, gi, j
    cdef int k
    cdef int32_t ncls = 0
    cdef pt_t* x
    cdef pt_t* gg
    cdef pt_t* gv
    try:
        if ginv == NULL or tmp == NULL or labels == NULL or stack == NULL:
            raise MemoryError()
        for gi in range(ngens):
            for k in range(degree):
                ginv[gi * degree + g[gi * degree + k]] = <pt_t> k
        for j in range(n):
            labels[j] = -1
        for start in range(n):
            if labels[start] != -1:
                continue
            labels[start] = ncls
            top = 0
            stack[top] = <int32_t> start
            top += 1
            while top > 0:
                top -= 1
                x = st.row(stack[top])
                for gi in range(ngens):
                    gg = g + gi * degree
                    gv = ginv + gi * degree
                    for k in range(degree):
                        tmp[k] = gg[x[gv[k]]]
                    j = st.lookup(tmp)
                    if labels[j] == -1:
                        labels[j] = ncls
                        stack[top] = <int32_t> j
                        top += 1
            ncls += 1
        return [labels[j] for j in range(n)]
    finally:
        free(g)
        free(ginv)
        free(tmp)
        free(labels)
        free(stack)


cdef long _gcd(long a, long b) noexcept:
    while b:
        a, b = b, a % b
    return a


def perm_orders(perms):
    cdef _Store st = _store_from(perms)
    cdef int degree = st.degree
    cdef char* seen = <char*> malloc(degree)
    cdef Py_ssize_t i
    cdef int s, k, length
    cdef long order
    cdef pt_t* p
    out = []
    try:
        for i in range(st.count):
            p = st.row(i)
            memset(seen, 0, degree)
            order = 1
            for s in range(degree):
                if seen[s]:
                    continue
                length = 0
                k = s
                while not seen[k]:
                    seen[k] = 1
                    k = p[k]
                    length += 1
                order = order // _gcd(order, length) * length
            out.append(order)
    finally:
        free(seen)
    return out


def count_commuting(perms, members, Py_ssize_t x):
    members = list(members)
    if not members:
        return 0
    cdef int degree = len(perms[x])
    cdef pt_t* px = _to_rows([perms[x]], degree)
    # only the member rows are packed; the full element list may be large
    cdef pt_t* rows = _to_rows([perms[m] for m in members], degree)
    cdef pt_t* py
    cdef Py_ssize_t i, total = 0
    cdef int k
    cdef bint ok
    try:
        for i in range(len(members)):
            py = rows + i * degree
            ok = True
            for k in range(degree):
                if py[px[k]] != px[py[k]]:
                    ok = False
                    break
            if ok:
                total += 1
    finally:
        free(px)
        free(rows)
    return total


def multiplication_table(perms):
    cdef _Store st = _store_from(perms)
    cdef int degree = st.degree
    cdef Py_ssize_t n = st.count, i, j
    cdef int k
    cdef pt_t* tmp = <pt_t*> malloc(degree * sizeof(pt_t))
    cdef pt_t* p
    cdef pt_t* q
    table = array("i", bytes(4 * n * n))
    cdef int[:] t = table
    try:
        for i in range(n):
            p = st.row(i)
            for j in range(n):
                q = st.row(j)
                for k in range(degree):
                    tmp[k] = q[p[k]]
                t[i * n + j] = <int> st.lookup(tmp)
    finally:
        free(tmp)
    return table


def table_join(const int[:] table, Py_ssize_t n, gens):
    cdef Py_ssize_t ng = 0, head = 0, tail = 0, x, y, gi
    cdef int* g = <int*> malloc(max(len(gens), 1) * sizeof(int))
    cdef int* queue = <int*> malloc(max(n, 1) * sizeof(int))
    mask = bytearray(n)
    cdef unsigned char[:] mk = mask
    try:
        if g == NULL or queue == NULL:
            raise MemoryError()
        for v in gens:
            if v != 0:
                g[ng] = v
                ng += 1
        mk[0] = 1
        queue[tail] = 0
        tail += 1
        while head < tail:
            x = queue[head]
            head += 1
            for gi in range(ng):
                y = table[x * n + g[gi]]
                if not mk[y]:
                    mk[y] = 1
                    queue[tail] = <int> y
                    tail += 1
    finally:
        free(g)
        free(queue)
    return bytes(mask)
