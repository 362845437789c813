#include "mpx/homology.hpp"

#include <sstream>
#include <stdexcept>

namespace mpx {

namespace {
const std::vector<Int> kNoTorsion;
}

long long HomologySummary::betti_at(int d) const {
    if (d < 0 || d >= static_cast<int>(betti.size())) return 0;
    return betti[d];
}

const std::vector<Int>& HomologySummary::torsion_at(int d) const {
    if (d < 0 || d >= static_cast<int>(torsion.size())) return kNoTorsion;
    return torsion[d];
}

bool HomologySummary::torsion_free() const {
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

bool HomologySummary::trivial() const {
    if (empty_complex) return false;
    for (long long b : betti)
        if (b) return false;
    return torsion_free();
}

Int HomologySummary::reduced_euler() const {
    if (empty_complex) return -1;
    Int chi = 0;
    for (std::size_t d = 0; d < betti.size(); ++d)
        chi += (d % 2 == 0) ? Int(betti[d]) : Int(-betti[d]);
    return chi;
}

HomologySummary HomologySummary::shifted(int degrees) const {
    if (empty_complex)
        throw std::invalid_argument("shift of the empty complex is undefined");
    HomologySummary out;
    out.betti.assign(degrees, 0);
    out.torsion.assign(degrees, {});
    out.betti.insert(out.betti.end(), betti.begin(), betti.end());
    out.torsion.insert(out.torsion.end(), torsion.begin(), torsion.end());
    out.normalize();
    return out;
}

void HomologySummary::normalize() {
    while (!betti.empty() && betti.back() == 0) betti.pop_back();
    while (!torsion.empty() && torsion.back().empty()) torsion.pop_back();
}

bool HomologySummary::same_groups(const HomologySummary& other) const {
    if (empty_complex != other.empty_complex) return false;
    HomologySummary a = *this, b = other;
    a.normalize();
    b.normalize();
    return a.betti == b.betti && a.torsion == b.torsion;
}

std::string HomologySummary::to_string() const {
    if (empty_complex) return "empty";
    std::ostringstream os;
    bool any = false;
    std::size_t degrees = std::max(betti.size(), torsion.size());
    for (std::size_t d = 0; d < degrees; ++d) {
        long long b = d < betti.size() ? betti[d] : 0;
        const auto& t = d < torsion.size() ? torsion[d] : kNoTorsion;
        if (b == 0 && t.empty()) continue;
        if (any) os << "  ";
        any = true;
        os << "H_" << d << " = ";
        if (b > 0) os << "Z^" << b;
        if (b == 0 && t.empty()) os << "0";
        for (const Int& q : t) {
            if (b > 0 || &q != &t.front()) os << " + ";
            os << "Z/" << q;
        }
    }
    if (!any) return "trivial";
    return os.str();
}

HomologySummary reduced_homology(const SimplicialComplex& x) {
    HomologySummary out;
    if (x.empty()) {
        out.empty_complex = true;
        return out;
    }
    int dim = x.dimension();
    std::vector<long long> rank(dim + 2, 0);
    std::vector<std::vector<Int>> tors_of_boundary(dim + 2);
    for (int d = 0; d <= dim; ++d) {
        SmithNormalForm snf = smith_normal_form(boundary_matrix(x, d));
        rank[d] = snf.rank;
        tors_of_boundary[d] = snf.nontrivial();
    }
    out.betti.assign(dim + 1, 0);
    out.torsion.assign(dim + 1, {});
    for (int d = 0; d <= dim; ++d) {
        out.betti[d] = x.face_count(d) - rank[d] - rank[d + 1];
        out.torsion[d] = tors_of_boundary[d + 1];
    }
    out.normalize();
    return out;
}

HomologySummary join_homology(const std::vector<HomologySummary>& pieces) {
    HomologySummary acc;
    acc.empty_complex = true;  // join unit
    for (const HomologySummary& piece : pieces) {
        if (!piece.torsion_free())
            throw std::invalid_argument("join_homology: torsion input");
        if (acc.empty_complex) {
            acc = piece;
            continue;
        }
        if (piece.empty_complex) continue;
        HomologySummary next;
        next.betti.assign(acc.betti.size() + piece.betti.size() + 1, 0);
        // Reduced Kuenneth for joins: degree shifts by one.
        for (std::size_t i = 0; i < acc.betti.size(); ++i)
            for (std::size_t j = 0; j < piece.betti.size(); ++j)
                next.betti[i + j + 1] += acc.betti[i] * piece.betti[j];
        next.normalize();
        acc = next;
    }
    return acc;
}

}  // namespace mpx
