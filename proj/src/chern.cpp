#include "hkc/chern.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace hkc::chern {

namespace {

// e_1..e_maxDegree of the given root polynomials, via prod (1 + t*root).
std::vector<Polynomial> elementaryOfRoots(const std::vector<Polynomial>& roots, std::size_t numVars,
                                          int maxDegree)
{
    std::vector<Polynomial> e(static_cast<std::size_t>(maxDegree) + 1, Polynomial(numVars));
    e[0] = Polynomial::constant(numVars, Rational(1));
    for (const Polynomial& root : roots)
        for (int d = maxDegree; d >= 1; --d)
            e[d] += root * e[d - 1];
    e.erase(e.begin());
    return e;
}

std::vector<std::size_t> range(std::size_t first, std::size_t count)
{
    std::vector<std::size_t> out(count);
    std::iota(out.begin(), out.end(), first);
    return out;
}

std::vector<Polynomial> computeSymPower(int k, int maxDegree)
{
    // Variables: x, y (roots), then generators e1, e2.
    const std::size_t nv = 4;
    Polynomial x = Polynomial::variable(nv, 0);
    Polynomial y = Polynomial::variable(nv, 1);
    std::vector<Polynomial> roots;
    for (int i = 0; i <= k; ++i)
        roots.push_back(x * Rational(k - i) + y * Rational(i));

    const auto rootVars = range(0, 2);
    const auto genVars = range(2, 2);
    std::vector<std::size_t> project{Polynomial::npos, Polynomial::npos, 0, 1};

    std::vector<Polynomial> out;
    for (const Polynomial& e : elementaryOfRoots(roots, nv, maxDegree))
        out.push_back(reduceSymmetric(e, rootVars, genVars).remapped(2, project));
    return out;
}

std::vector<Polynomial> computeTensor(int r, int s, int maxDegree)
{
    // Variables: x_1..x_r, y_1..y_s, a_1..a_r, b_1..b_s.
    const auto ur = static_cast<std::size_t>(r);
    const auto us = static_cast<std::size_t>(s);
    const std::size_t nv = 2 * (ur + us);
    std::vector<Polynomial> roots;
    for (std::size_t i = 0; i < ur; ++i)
        for (std::size_t j = 0; j < us; ++j)
            roots.push_back(Polynomial::variable(nv, i) + Polynomial::variable(nv, ur + j));

    const auto xs = range(0, ur);
    const auto ys = range(ur, us);
    const auto as = range(ur + us, ur);
    const auto bs = range(2 * ur + us, us);
    std::vector<std::size_t> project(nv, Polynomial::npos);
    for (std::size_t i = 0; i < ur + us; ++i)
        project[ur + us + i] = i;

    std::vector<Polynomial> out;
    for (const Polynomial& e : elementaryOfRoots(roots, nv, maxDegree)) {
        Polynomial p = reduceSymmetric(e, xs, as);
        p = reduceSymmetric(p, ys, bs);
        out.push_back(p.remapped(ur + us, project));
    }
    return out;
}

std::mutex cacheMutex;

} // namespace

const std::vector<Polynomial>& symPowerRank2Formula(int k, int maxDegree)
{
    if (k < 1 || maxDegree < 0)
        throw std::invalid_argument("symmetric power formula needs k >= 1");
    static std::map<std::pair<int, int>, std::vector<Polynomial>> cache;
    std::lock_guard lock(cacheMutex);
    auto key = std::make_pair(k, maxDegree);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, computeSymPower(k, maxDegree)).first;
    return it->second;
}

const std::vector<Polynomial>& tensorFormula(int r, int s, int maxDegree)
{
    if (r < 1 || s < 1 || maxDegree < 0)
        throw std::invalid_argument("tensor formula needs positive ranks");
    static std::map<std::tuple<int, int, int>, std::vector<Polynomial>> cache;
    std::lock_guard lock(cacheMutex);
    auto key = std::make_tuple(r, s, maxDegree);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, computeTensor(r, s, maxDegree)).first;
    return it->second;
}

} // namespace hkc::chern
