#include "ulrich/module.hpp"

#include <algorithm>
#include <numeric>

namespace ulrich {

Mat mat_transpose(const Mat& m)
{
    Mat t(m.cols, m.rows);
    for (size_t r = 0; r < m.rows; ++r)
        for (size_t c = 0; c < m.cols; ++c)
            t.at(c, r) = m.at(r, c);
    return t;
}

Vec mat_col(const Mat& m, size_t c)
{
    Vec v;
    v.c.resize(m.rows);
    for (size_t r = 0; r < m.rows; ++r)
        v.c[r] = m.at(r, c);
    return v;
}

std::vector<Vec> mat_cols(const Mat& m)
{
    std::vector<Vec> out;
    out.reserve(m.cols);
    for (size_t c = 0; c < m.cols; ++c)
        out.push_back(mat_col(m, c));
    return out;
}

std::vector<Vec> mat_rows_as_vecs(const Mat& m)
{
    std::vector<Vec> out;
    out.reserve(m.rows);
    for (size_t r = 0; r < m.rows; ++r) {
        Vec v;
        v.c.resize(m.cols);
        for (size_t c = 0; c < m.cols; ++c)
            v.c[c] = m.at(r, c);
        out.push_back(std::move(v));
    }
    return out;
}

Mat mat_from_cols(size_t rows, const std::vector<Vec>& cols)
{
    Mat m(rows, cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].rank() != rows)
            throw Error("mat_from_cols: column rank mismatch");
        for (size_t r = 0; r < rows; ++r)
            m.at(r, c) = cols[c].c[r];
    }
    return m;
}

Mat mat_mul(const PrimeField& F, const Mat& a, const Mat& b)
{
    if (a.cols != b.rows)
        throw Error("mat_mul: shape mismatch");
    Mat out(a.rows, b.cols);
    for (size_t r = 0; r < a.rows; ++r)
        for (size_t c = 0; c < b.cols; ++c) {
            Poly acc = poly_zero();
            for (size_t k = 0; k < a.cols; ++k)
                acc = poly_add(F, acc, poly_mul(F, a.at(r, k), b.at(k, c)));
            out.at(r, c) = std::move(acc);
        }
    return out;
}

ModuleData submodule_module(const RingPtr& ring, size_t ambient, std::vector<Vec> gens)
{
    ModuleData M;
    M.ring = ring;
    M.ambient = ambient;
    for (auto& g : gens) {
        if (g.rank() != ambient)
            throw Error("submodule generator has wrong ambient rank");
        if (!g.is_zero())
            M.gens.push_back(std::move(g));
    }
    return M;
}

ModuleData presentation_module(const RingPtr& ring, const Mat& relations)
{
    ModuleData M;
    M.ring = ring;
    M.ambient = relations.rows;
    for (size_t i = 0; i < relations.rows; ++i)
        M.gens.push_back(vec_unit(relations.rows, i, ring->nvars()));
    for (auto& c : mat_cols(relations))
        if (!c.is_zero())
            M.rels.push_back(std::move(c));
    return M;
}

ModuleData free_module(const RingPtr& ring, size_t rank)
{
    return presentation_module(ring, Mat(rank, 0));
}

ModuleData ring_as_module(const RingPtr& ring) { return free_module(ring, 1); }

ModuleData quotient_ring_module(const RingPtr& ring, const IdealData& I)
{
    ModuleData M = ring_as_module(ring);
    M.rels = ideal_vectors(I);
    return M;
}

ModuleData over_ring(const ModuleData& M, const RingPtr& ring2)
{
    if (ring2->nvars() != M.ring->nvars())
        throw Error("over_ring: variable mismatch");
    ModuleData out;
    out.ring = ring2;
    out.ambient = M.ambient;
    out.gens = M.gens;
    out.rels = M.rels;
    return out;
}

namespace {

std::vector<Vec> with_rels(const ModuleData& M)
{
    std::vector<Vec> v = M.gens;
    v.insert(v.end(), M.rels.begin(), M.rels.end());
    return v;
}

ModuleData zero_module_over(const RingPtr& ring)
{
    ModuleData Z;
    Z.ring = ring;
    Z.ambient = 0;
    return Z;
}

// drops elements that lie in the span of the remaining ones (Nakayama:
// an irredundant generating set over a local ring is minimal)
void minimalize_in_place(const RingPtr& ring, size_t ambient, std::vector<Vec>& v,
                         const std::vector<Vec>& fixedRels)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < v.size(); ++i) {
            std::vector<Vec> others = fixedRels;
            for (size_t j = 0; j < v.size(); ++j)
                if (j != i)
                    others.push_back(v[j]);
            StdBasis B = std_basis(*ring, ambient, others);
            if (is_member(*ring, v[i], B)) {
                v.erase(v.begin() + i);
                changed = true;
                break;
            }
        }
    }
}

}  // namespace

bool is_zero_module(const ModuleData& M)
{
    if (M.ambient == 0 || M.gens.empty())
        return true;
    StdBasis B = std_basis(*M.ring, M.ambient, M.rels);
    for (const auto& g : M.gens)
        if (!is_member(*M.ring, g, B))
            return false;
    return true;
}

long long module_nu(const ModuleData& M)
{
    if (M.ambient == 0)
        return 0;
    std::vector<Vec> V = M.rels;
    for (const auto& g : M.gens)
        for (size_t v = 0; v < M.ring->nvars(); ++v) {
            Poly xv = poly_term(monomial_var(M.ring->nvars(), v, 1, M.ring->weights()), 1);
            V.push_back(vec_mul_poly(M.ring->field(), g, xv));
        }
    auto n = subquotient_length(*M.ring, M.ambient, with_rels(M), V);
    if (!n)
        throw Error("module_nu: unexpected infinite value");
    return *n;
}

std::optional<long long> module_length(const ModuleData& M)
{
    if (M.ambient == 0)
        return 0;
    return subquotient_length(*M.ring, M.ambient, with_rels(M), M.rels);
}

const MinimalPresentation& minimal_presentation(const ModuleData& M)
{
    if (M.presCache)
        return *M.presCache;
    auto pres = std::make_shared<MinimalPresentation>();

    StdBasis relB = std_basis(*M.ring, M.ambient, M.rels);
    std::vector<Vec> mg;
    for (const auto& g : M.gens)
        if (!is_member(*M.ring, g, relB))
            mg.push_back(g);
    minimalize_in_place(M.ring, M.ambient, mg, M.rels);
    if (module_nu(M) != static_cast<long long>(mg.size()))
        throw Error("minimal_presentation: generator minimalization disagrees with l(M/mM)");

    std::vector<Vec> syz = syzygies(*M.ring, M.ambient, mg, M.rels);
    std::vector<Vec> ms;
    if (!mg.empty()) {
        auto relBnu = relation_basis(*M.ring, mg.size());
        for (const auto& s : syz)
            if (!is_member(*M.ring, s, *relBnu))
                ms.push_back(s);
        minimalize_in_place(M.ring, mg.size(), ms, {});
    }
    for (const auto& s : ms)
        if (!in_max_ideal(s))
            throw Error("minimal_presentation: relation with a unit entry survived");

    pres->minGens = std::move(mg);
    pres->matrix = mat_from_cols(pres->minGens.size(), ms);
    M.presCache = pres;
    return *M.presCache;
}

FreeResolution resolve(const ModuleData& M, int steps)
{
    if (steps < 1)
        throw Error("resolve: steps must be >= 1");
    FreeResolution res;
    if (is_zero_module(M)) {
        res.betti.assign(static_cast<size_t>(steps) + 1, 0);
        for (int i = 0; i < steps; ++i)
            res.matrices.push_back(Mat(0, 0));
        return res;
    }
    const MinimalPresentation& pres = minimal_presentation(M);
    res.betti.push_back(static_cast<long long>(pres.minGens.size()));
    res.matrices.push_back(pres.matrix);
    res.betti.push_back(static_cast<long long>(pres.matrix.cols));

    for (int k = 2; k <= steps; ++k) {
        const Mat& A = res.matrices.back();
        if (A.cols == 0) {
            res.matrices.push_back(Mat(0, 0));
            res.betti.push_back(0);
            continue;
        }
        std::vector<Vec> gens = mat_cols(A);
        std::vector<Vec> syz = syzygies(*M.ring, A.rows, gens);
        auto relB = relation_basis(*M.ring, gens.size());
        std::vector<Vec> ms;
        for (const auto& s : syz)
            if (!is_member(*M.ring, s, *relB))
                ms.push_back(s);
        minimalize_in_place(M.ring, gens.size(), ms, {});
        for (const auto& s : ms)
            if (!in_max_ideal(s))
                throw Error("resolve: non-minimal differential");
        res.matrices.push_back(mat_from_cols(gens.size(), ms));
        res.betti.push_back(static_cast<long long>(ms.size()));
    }

    // periodicity of the differentials, compared after normalization (up to
    // permutations and unit scalings of rows and columns)
    int n = static_cast<int>(res.matrices.size());
    for (int start = 1; start <= n && !res.periodic; ++start)
        for (int period = 1; start + period <= n && !res.periodic; ++period) {
            bool ok = true;
            for (int i = start; i + period <= n && ok; ++i)
                ok = presentations_equivalent(*M.ring, res.matrices[i - 1],
                                              res.matrices[i + period - 1]);
            if (ok)
                res.periodic = std::make_pair(start, period);
        }
    return res;
}

ModuleData syzygy_module(const ModuleData& M, int k)
{
    if (k < 1)
        throw Error("syzygy_module: k must be >= 1");
    FreeResolution res = resolve(M, k);
    const Mat& A = res.matrices[static_cast<size_t>(k) - 1];
    return submodule_module(M.ring, A.rows, mat_cols(A));
}

ModuleData transpose_module(const ModuleData& M)
{
    if (is_zero_module(M))
        return zero_module_over(M.ring);
    const MinimalPresentation& pres = minimal_presentation(M);
    return presentation_module(M.ring, mat_transpose(pres.matrix));
}

ModuleData dual_module(const ModuleData& M)
{
    if (is_zero_module(M))
        return zero_module_over(M.ring);
    const MinimalPresentation& pres = minimal_presentation(M);
    size_t nu0 = pres.minGens.size();
    size_t nu1 = pres.matrix.cols;
    if (nu1 == 0) {
        std::vector<Vec> units;
        for (size_t i = 0; i < nu0; ++i)
            units.push_back(vec_unit(nu0, i, M.ring->nvars()));
        return submodule_module(M.ring, nu0, std::move(units));
    }
    std::vector<Vec> rows = mat_rows_as_vecs(pres.matrix);  // vectors in R^{nu1}
    std::vector<Vec> ker = syzygies(*M.ring, nu1, rows);
    return submodule_module(M.ring, nu0, std::move(ker));
}

std::vector<Vec> preimage_submodule(const AmbientRing& R, size_t a,
                                    const std::vector<Vec>& imagesOfUnits, size_t b,
                                    const std::vector<Vec>& S)
{
    if (imagesOfUnits.size() != a)
        throw Error("preimage_submodule: need one image per source unit vector");
    if (b == 0) {
        std::vector<Vec> all;
        for (size_t i = 0; i < a; ++i)
            all.push_back(vec_unit(a, i, R.nvars()));
        return all;
    }
    std::vector<Vec> list = imagesOfUnits;
    list.insert(list.end(), S.begin(), S.end());
    std::vector<Vec> syz = syzygies(R, b, list);
    std::vector<Vec> out;
    for (const auto& s : syz) {
        Vec head;
        head.c.assign(s.c.begin(), s.c.begin() + a);
        if (!head.is_zero())
            out.push_back(std::move(head));
    }
    return out;
}

namespace {

// relations of Hom(F_k, N) ~ N^{beta_k} on the free cover R^{beta_k * m0}:
// one copy of the presentation of N per slot
std::vector<Vec> block_relations(const RingPtr& ring, size_t beta, size_t m0, const Mat& B)
{
    std::vector<Vec> out;
    for (size_t j = 0; j < beta; ++j)
        for (size_t c = 0; c < B.cols; ++c) {
            Vec v = vec_zero(beta * m0, ring->nvars());
            for (size_t t = 0; t < m0; ++t)
                v.c[j * m0 + t] = B.at(t, c);
            if (!v.is_zero())
                out.push_back(std::move(v));
        }
    return out;
}

// images of the unit vectors of Hom(F_{k-1}, N) under composition with A_k:
// slot (j, t) maps to the vector with component (c, t) = A[j][c]
std::vector<Vec> hom_map_images(const RingPtr& ring, const Mat& A, size_t m0)
{
    std::vector<Vec> out;
    for (size_t j = 0; j < A.rows; ++j)
        for (size_t t = 0; t < m0; ++t) {
            Vec v = vec_zero(A.cols * m0, ring->nvars());
            for (size_t c = 0; c < A.cols; ++c)
                v.c[c * m0 + t] = A.at(j, c);
            out.push_back(std::move(v));
        }
    return out;
}

// images of the unit vectors of F_k tensor N under A_k tensor N:
// slot (c, t) maps to the vector with component (r, t) = A[r][c]
std::vector<Vec> tensor_map_images(const RingPtr& ring, const Mat& A, size_t m0)
{
    std::vector<Vec> out;
    for (size_t c = 0; c < A.cols; ++c)
        for (size_t t = 0; t < m0; ++t) {
            Vec v = vec_zero(A.rows * m0, ring->nvars());
            for (size_t r = 0; r < A.rows; ++r)
                v.c[r * m0 + t] = A.at(r, c);
            out.push_back(std::move(v));
        }
    return out;
}

}  // namespace

ModuleData ext_module(const ModuleData& M, const ModuleData& N, int i)
{
    if (i < 0)
        throw Error("ext_module: negative index");
    if (M.ring != N.ring)
        throw Error("ext_module: rings differ");
    if (is_zero_module(M) || is_zero_module(N))
        return zero_module_over(M.ring);

    FreeResolution res = resolve(M, i + 1);
    const MinimalPresentation& presN = minimal_presentation(N);
    size_t m0 = presN.minGens.size();
    const Mat& B = presN.matrix;

    size_t beta_i = static_cast<size_t>(res.betti[static_cast<size_t>(i)]);
    if (beta_i == 0)
        return zero_module_over(M.ring);
    const Mat& Anext = res.matrices[static_cast<size_t>(i)];  // d_{i+1}

    std::vector<Vec> relTarget = block_relations(M.ring, Anext.cols, m0, B);
    std::vector<Vec> K = preimage_submodule(*M.ring, beta_i * m0,
                                            hom_map_images(M.ring, Anext, m0),
                                            Anext.cols * m0, relTarget);

    std::vector<Vec> rels = block_relations(M.ring, beta_i, m0, B);
    if (i >= 1) {
        const Mat& Ai = res.matrices[static_cast<size_t>(i) - 1];  // d_i
        auto im = hom_map_images(M.ring, Ai, m0);
        rels.insert(rels.end(), im.begin(), im.end());
    }
    ModuleData E;
    E.ring = M.ring;
    E.ambient = beta_i * m0;
    E.gens = std::move(K);
    E.rels = std::move(rels);
    return E;
}

ModuleData hom_module(const ModuleData& M, const ModuleData& N) { return ext_module(M, N, 0); }

ModuleData tor_module(const ModuleData& M, const ModuleData& N, int j)
{
    if (j < 0)
        throw Error("tor_module: negative index");
    if (M.ring != N.ring)
        throw Error("tor_module: rings differ");
    if (is_zero_module(M) || is_zero_module(N))
        return zero_module_over(M.ring);

    FreeResolution res = resolve(M, j + 1);
    const MinimalPresentation& presN = minimal_presentation(N);
    size_t m0 = presN.minGens.size();
    const Mat& B = presN.matrix;

    size_t beta_j = static_cast<size_t>(res.betti[static_cast<size_t>(j)]);
    if (beta_j == 0)
        return zero_module_over(M.ring);

    ModuleData T;
    T.ring = M.ring;
    T.ambient = beta_j * m0;
    T.rels = block_relations(M.ring, beta_j, m0, B);
    const Mat& Anext = res.matrices[static_cast<size_t>(j)];  // d_{j+1}
    auto imNext = tensor_map_images(M.ring, Anext, m0);
    T.rels.insert(T.rels.end(), imNext.begin(), imNext.end());

    if (j == 0) {
        for (size_t i = 0; i < T.ambient; ++i)
            T.gens.push_back(vec_unit(T.ambient, i, M.ring->nvars()));
        return T;
    }
    const Mat& Aj = res.matrices[static_cast<size_t>(j) - 1];  // d_j
    std::vector<Vec> relTarget = block_relations(M.ring, Aj.rows, m0, B);
    T.gens = preimage_submodule(*M.ring, beta_j * m0, tensor_map_images(M.ring, Aj, m0),
                                Aj.rows * m0, relTarget);
    return T;
}

ModuleData quotient_by_ideal(const ModuleData& M, const IdealData& J)
{
    ModuleData out = M;
    out.presCache.reset();
    for (const auto& j : J.gens)
        for (const auto& g : M.gens)
            out.rels.push_back(vec_mul_poly(M.ring->field(), g, j));
    return out;
}

ModuleData mult_by_ideal(const IdealData& J, const ModuleData& M)
{
    ModuleData out;
    out.ring = M.ring;
    out.ambient = M.ambient;
    out.rels = M.rels;
    for (const auto& j : J.gens)
        for (const auto& g : M.gens)
            out.gens.push_back(vec_mul_poly(M.ring->field(), g, j));
    return out;
}

ModuleData quotient_by_ideal_over(const ModuleData& M, const IdealData& J, const RingPtr& RmodJ)
{
    // a minimal presentation of M over R also presents M tensor R/J = M/JM
    // over R/J (right-exactness); subquotient data cannot simply be
    // reinterpreted because the ambient quotient changes
    (void)J;
    if (is_zero_module(M)) {
        ModuleData Z;
        Z.ring = RmodJ;
        Z.ambient = 0;
        return Z;
    }
    return presentation_module(RmodJ, minimal_presentation(M).matrix);
}

bool same_subquotient(const ModuleData& A, const ModuleData& B)
{
    if (A.ambient != B.ambient)
        return false;
    std::vector<Vec> a = A.gens;
    a.insert(a.end(), A.rels.begin(), A.rels.end());
    std::vector<Vec> b = B.gens;
    b.insert(b.end(), B.rels.begin(), B.rels.end());
    return submodule_equals(*A.ring, A.ambient, a, b);
}

bool is_regular_sequence_on(const ModuleData& M, const std::vector<Poly>& elems)
{
    for (const auto& t : elems)
        if (!in_max_ideal(t))
            throw Error("is_regular_sequence_on: element outside the maximal ideal");
    ModuleData cur = M;
    const PrimeField& F = M.ring->field();
    for (const auto& t : elems) {
        // kernel of multiplication by t on cur must vanish
        std::vector<Vec> tId;
        for (size_t i = 0; i < cur.ambient; ++i) {
            Vec v = vec_zero(cur.ambient, M.ring->nvars());
            v.c[i] = t;
            tId.push_back(std::move(v));
        }
        std::vector<Vec> W = preimage_submodule(*M.ring, cur.ambient, tId, cur.ambient, cur.rels);
        // kernel = W  intersect  (gens + rels); check it lies inside rels
        std::vector<Vec> list = W;
        std::vector<Vec> span = cur.gens;
        span.insert(span.end(), cur.rels.begin(), cur.rels.end());
        list.insert(list.end(), span.begin(), span.end());
        std::vector<Vec> syz = syzygies(*M.ring, cur.ambient, list);
        StdBasis relB = std_basis(*M.ring, cur.ambient, cur.rels);
        for (const auto& s : syz) {
            Vec e = vec_zero(cur.ambient, M.ring->nvars());
            for (size_t i = 0; i < W.size(); ++i)
                e = vec_add(F, e, vec_mul_poly(F, W[i], s.c[i]));
            if (!is_member(*M.ring, e, relB))
                return false;  // nonzero kernel element
        }
        for (const auto& g : cur.gens)
            cur.rels.push_back(vec_mul_poly(F, g, t));
        cur.presCache.reset();
    }
    return !is_zero_module(cur);
}

bool is_maximal_cohen_macaulay(const ModuleData& M, const std::vector<Poly>& Qgens)
{
    if (is_zero_module(M))
        return false;  // the zero module is not maximal Cohen-Macaulay
    return is_regular_sequence_on(M, Qgens);
}

bool is_free_over_artinian(const ModuleData& N)
{
    auto lenA = quotient_length(*N.ring, *relation_basis(*N.ring, 1));
    if (!lenA)
        throw Error("is_free_over_artinian: the base ring is not Artinian");
    auto lenN = module_length(N);
    if (!lenN)
        throw Error("is_free_over_artinian: module of infinite length");
    long long nu = module_nu(N);
    return *lenN == nu * *lenA;
}

IdealData trace_ideal(const ModuleData& M)
{
    if (is_zero_module(M))
        return make_ideal(M.ring, {});
    ModuleData D = dual_module(M);
    std::vector<Poly> gens;
    for (const auto& g : D.gens)
        for (const auto& p : g.c)
            if (!p.is_zero())
                gens.push_back(p);
    return make_ideal(M.ring, std::move(gens));
}

IdealData annihilator(const ModuleData& M)
{
    const PrimeField& F = M.ring->field();
    IdealData acc = make_ideal(M.ring, {poly_const(F, 1, M.ring->nvars())});
    const MinimalPresentation& pres = minimal_presentation(M);
    for (const auto& g : pres.minGens) {
        std::vector<Vec> list;
        list.push_back(g);
        for (const auto& r : M.rels)
            list.push_back(r);
        auto syz = syzygies(*M.ring, M.ambient, list);
        std::vector<Poly> colon;
        for (const auto& s : syz)
            if (!s.c[0].is_zero())
                colon.push_back(s.c[0]);
        acc = ideal_intersect(acc, make_ideal(M.ring, std::move(colon)));
    }
    return acc;
}

ModuleData lambda_module(const ModuleData& M)
{
    if (is_zero_module(M))
        return zero_module_over(M.ring);
    const MinimalPresentation& pres = minimal_presentation(M);
    // Omega Tr M = column span of the transposed presentation inside R^{nu1}
    return submodule_module(M.ring, pres.matrix.cols, mat_rows_as_vecs(pres.matrix));
}

LinkageReport linkage(const ModuleData& M)
{
    if (is_zero_module(M))
        throw Error("linkage: zero module");
    LinkageReport rep;
    IdealData tr = trace_ideal(M);
    bool inMax = true;
    for (const auto& g : tr.gens)
        if (!in_max_ideal(g)) {
            inMax = false;
            break;
        }
    rep.traceIdealInMaximal = inMax;
    rep.stable = inMax;
    ModuleData Tr = transpose_module(M);
    rep.ext1TrVanishes = is_zero_module(ext_module(Tr, ring_as_module(M.ring), 1));
    rep.horizontallyLinked = rep.stable && rep.ext1TrVanishes;
    rep.lambda = lambda_module(M);
    return rep;
}

Mat normalized_presentation(const AmbientRing& R, const Mat& m)
{
    const PrimeField& F = R.field();
    std::vector<Vec> cols = mat_cols(m);
    for (auto& c : cols)
        c = vec_monic(F, c);
    std::sort(cols.begin(), cols.end(), [&](const Vec& a, const Vec& b) {
        LeadRef la = vec_lead(a), lb = vec_lead(b);
        if (la.comp < 0 || lb.comp < 0)
            return lb.comp < 0 && la.comp >= 0;
        int cmp = module_cmp(la.comp, la.m, lb.comp, lb.m);
        if (cmp != 0)
            return cmp > 0;
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i].t.size() != b.c[i].t.size())
                return a.c[i].t.size() < b.c[i].t.size();
            for (size_t k = 0; k < a.c[i].t.size(); ++k) {
                int c2 = local_cmp(a.c[i].t[k].m, b.c[i].t[k].m);
                if (c2 != 0)
                    return c2 > 0;
                if (a.c[i].t[k].c != b.c[i].t[k].c)
                    return a.c[i].t[k].c < b.c[i].t[k].c;
            }
        }
        return false;
    });
    return mat_from_cols(m.rows, cols);
}

namespace {

// b = gamma * a for a scalar gamma? (a, b nonzero)
std::optional<uint32_t> scalar_ratio(const PrimeField& F, const Poly& a, const Poly& b)
{
    if (a.t.size() != b.t.size())
        return std::nullopt;
    uint32_t gamma = 0;
    for (size_t i = 0; i < a.t.size(); ++i) {
        if (a.t[i].m != b.t[i].m)
            return std::nullopt;
        uint32_t g = F.div(b.t[i].c, a.t[i].c);
        if (i == 0)
            gamma = g;
        else if (g != gamma)
            return std::nullopt;
    }
    return gamma;
}

// Backtracking column matcher: does D_row * A * D_col-permutation equal B for
// some unit scalars? Row permutation handled by the caller.
struct ColumnMatcher {
    const PrimeField& F;
    const Mat& A;
    const Mat& B;
    std::vector<std::optional<uint32_t>> rowScale;  // d_i with A = d.c.B
    std::vector<bool> used;

    bool match(size_t colA)
    {
        if (colA == A.cols)
            return true;
        for (size_t colB = 0; colB < B.cols; ++colB) {
            if (used[colB])
                continue;
            auto saved = rowScale;
            if (compatible(colA, colB)) {
                used[colB] = true;
                if (match(colA + 1))
                    return true;
                used[colB] = false;
            }
            rowScale = std::move(saved);
        }
        return false;
    }

    bool compatible(size_t ca, size_t cb)
    {
        // need a column scalar c with A[i][ca] = d_i * c * B[i][cb]
        std::vector<std::pair<size_t, uint32_t>> gamma;  // rows with both nonzero
        for (size_t i = 0; i < A.rows; ++i) {
            const Poly& a = A.at(i, ca);
            const Poly& b = B.at(i, cb);
            if (a.is_zero() != b.is_zero())
                return false;
            if (a.is_zero())
                continue;
            auto g = scalar_ratio(F, b, a);  // a = g * b
            if (!g)
                return false;
            gamma.push_back({i, *g});
        }
        if (gamma.empty())
            return true;  // zero columns
        uint32_t c = 0;
        bool haveC = false;
        for (auto& [i, g] : gamma)
            if (rowScale[i]) {
                c = F.div(g, *rowScale[i]);
                haveC = true;
                break;
            }
        if (!haveC) {
            rowScale[gamma[0].first] = 1;
            c = gamma[0].second;
        }
        if (c == 0)
            return false;
        for (auto& [i, g] : gamma) {
            if (rowScale[i]) {
                if (F.mul(*rowScale[i], c) != g)
                    return false;
            } else {
                rowScale[i] = F.div(g, c);
            }
        }
        return true;
    }
};

}  // namespace

bool presentations_equivalent(const AmbientRing& R, const Mat& A, const Mat& B)
{
    if (A.rows != B.rows || A.cols != B.cols)
        return false;
    if (A.rows == 0 || A.cols == 0)
        return true;
    const PrimeField& F = R.field();
    auto try_rowperm = [&](const std::vector<size_t>& perm) {
        Mat P(B.rows, B.cols);
        for (size_t r = 0; r < B.rows; ++r)
            for (size_t c = 0; c < B.cols; ++c)
                P.at(r, c) = B.at(perm[r], c);
        ColumnMatcher m{F, A, P, std::vector<std::optional<uint32_t>>(A.rows),
                        std::vector<bool>(B.cols, false)};
        return m.match(0);
    };
    std::vector<size_t> perm(A.rows);
    std::iota(perm.begin(), perm.end(), 0);
    if (A.rows > 6)
        return try_rowperm(perm);
    do {
        if (try_rowperm(perm))
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace ulrich
