#include "bipcolor/lists.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "bipcolor/rng.hpp"

namespace bipcolor {

namespace {

void check_list(const std::vector<int>& list, int k, const std::string& where) {
    if (static_cast<int>(list.size()) != k) {
        throw IndexOutOfRange(where + ": list has size " + std::to_string(list.size()) +
                              ", expected k=" + std::to_string(k));
    }
    for (std::size_t i = 1; i < list.size(); ++i) {
        if (list[i] <= list[i - 1]) {
            throw IndexOutOfRange(where + ": list not strictly increasing");
        }
    }
}

// Floyd's k-subset sampler over {1..pool}, returned sorted.
std::vector<int> random_k_subset(int k, int pool, rng::Engine& eng) {
    std::vector<int> picked;
    picked.reserve(k);
    for (int j = pool - k + 1; j <= pool; ++j) {
        int t = 1 + static_cast<int>(rng::uniform_below(eng, j));
        if (std::find(picked.begin(), picked.end(), t) != picked.end()) {
            picked.push_back(j);
        } else {
            picked.push_back(t);
        }
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

}  // namespace

ListAssignment make_assignment(int k, std::vector<std::vector<int>> lists_a,
                               std::vector<std::vector<int>> lists_b) {
    for (std::size_t i = 0; i < lists_a.size(); ++i) {
        check_list(lists_a[i], k, "a" + std::to_string(i));
    }
    for (std::size_t i = 0; i < lists_b.size(); ++i) {
        check_list(lists_b[i], k, "b" + std::to_string(i));
    }
    return ListAssignment{k, std::move(lists_a), std::move(lists_b)};
}

std::optional<int> index_of(const ListAssignment& lists, Vertex v, int c) {
    auto list = lists.list(v);
    auto it = std::lower_bound(list.begin(), list.end(), c);
    if (it == list.end() || *it != c) return std::nullopt;
    return static_cast<int>(it - list.begin()) + 1;  // 1-based
}

int shared_count(const ListAssignment& lists, Vertex v, Vertex w) {
    auto lv = lists.list(v);
    auto lw = lists.list(w);
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < lv.size() && j < lw.size()) {
        if (lv[i] < lw[j]) {
            ++i;
        } else if (lv[i] > lw[j]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

long long weight(const ListAssignment& lists, const BipartiteGraph& g, Vertex w) {
    if (w.side != Side::b) throw WrongPart("weight requires a part-B vertex");
    long long z = 0;
    for (int v : g.neighbors(w)) {
        z += shared_count(lists, Vertex::a(v), w);
    }
    return z;
}

WeightStats weight_stats(const ListAssignment& lists, const BipartiteGraph& g, Vertex w) {
    if (w.side != Side::b) throw WrongPart("weight_stats requires a part-B vertex");
    const int k = lists.k;
    const int delta = g.delta;
    const int threshold = (9 * k) / 10;  // ell > floor(9k/10) marks n_prime

    WeightStats st;
    st.w = w.idx;
    long long sum_prime = 0;
    long long sum_dprime = 0;
    for (int v : g.neighbors(w)) {
        int ell = shared_count(lists, Vertex::a(v), w);
        st.shared.emplace_back(v, ell);
        st.big_z += ell;
        if (ell > threshold) {
            st.n_prime.push_back(v);
            sum_prime += ell;
        } else {
            st.n_dprime.push_back(v);
            sum_dprime += ell;
        }
    }
    const long long denom = static_cast<long long>(delta) * k;
    st.z = denom > 0 ? static_cast<double>(st.big_z) / static_cast<double>(denom) : 0.0;
    st.y = delta > 0 ? static_cast<double>(st.n_prime.size()) / delta : 0.0;
    if (!st.n_prime.empty()) {
        // alpha = sum_{n_prime} (ell - 9k/10) / (|n_prime| k), exact rational
        // numerator 10*sum - 9k|n_prime| over 10k|n_prime|.
        const long long np = static_cast<long long>(st.n_prime.size());
        st.alpha = static_cast<double>(10 * sum_prime - 9 * static_cast<long long>(k) * np) /
                   static_cast<double>(10 * static_cast<long long>(k) * np);
    }
    if (!st.n_dprime.empty()) {
        st.ell_bar = static_cast<double>(sum_dprime) /
                     static_cast<double>(st.n_dprime.size());
    }
    return st;
}

ListAssignment gen_lists(const BipartiteGraph& g, int k, int pool, ListMode mode,
                         std::uint64_t seed, double theta) {
    if (k < 1) throw PoolTooSmall("k must be >= 1");
    if (pool < k) {
        throw PoolTooSmall("pool " + std::to_string(pool) + " < k " + std::to_string(k));
    }
    auto eng = rng::make_engine(seed);

    int core = 0;
    if (mode == ListMode::planted_overlap) {
        core = static_cast<int>(std::lround(theta * k));
        core = std::clamp(core, 0, k);
    }

    auto gen_one = [&]() {
        if (mode == ListMode::independent_uniform) {
            return random_k_subset(k, pool, eng);
        }
        // Core {1..core} in every list keeps the shared colors at the lowest
        // indices; the fill is a random subset of the remaining pool.
        std::vector<int> list(core);
        for (int c = 1; c <= core; ++c) list[c - 1] = c;
        auto fill = random_k_subset(k - core, pool - core, eng);
        for (int c : fill) list.push_back(core + c);
        return list;
    };

    std::vector<std::vector<int>> la(g.a_size()), lb(g.b_size());
    for (auto& l : la) l = gen_one();
    for (auto& l : lb) l = gen_one();
    return make_assignment(k, std::move(la), std::move(lb));
}

void save_lists(const ListAssignment& lists, std::ostream& out) {
    out << "lists " << (lists.lists_a.size() + lists.lists_b.size()) << ' ' << lists.k
        << '\n';
    auto dump = [&](const std::vector<std::vector<int>>& ls) {
        for (const auto& list : ls) {
            for (std::size_t i = 0; i < list.size(); ++i) {
                if (i > 0) out << ' ';
                out << list[i];
            }
            out << '\n';
        }
    };
    dump(lists.lists_a);
    dump(lists.lists_b);
}

void save_lists_file(const ListAssignment& lists, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoFailure("cannot open " + path + " for writing");
    save_lists(lists, out);
}

ListAssignment load_lists(std::istream& in, int a_size, int b_size) {
    std::string line;
    if (!std::getline(in, line)) throw IoFailure("line 1: empty list file");
    std::istringstream header(line);
    std::string tag;
    long long count = -1, k = -1;
    if (!(header >> tag >> count >> k) || tag != "lists" || k < 1) {
        throw IoFailure("line 1: expected 'lists <vertex_count> <k>'");
    }
    if (count != static_cast<long long>(a_size) + b_size) {
        throw IoFailure("line 1: vertex count " + std::to_string(count) +
                        " does not match graph (" + std::to_string(a_size + b_size) + ")");
    }
    std::vector<std::vector<int>> la, lb;
    int line_no = 1;
    for (long long row = 0; row < count; ++row) {
        if (!std::getline(in, line)) {
            throw IoFailure("line " + std::to_string(line_no + 1) + ": missing list row");
        }
        ++line_no;
        std::istringstream cells(line);
        std::vector<int> list;
        int c;
        while (cells >> c) list.push_back(c);
        try {
            check_list(list, static_cast<int>(k), "vertex row");
        } catch (const IndexOutOfRange& e) {
            throw IoFailure("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (row < a_size) {
            la.push_back(std::move(list));
        } else {
            lb.push_back(std::move(list));
        }
    }
    return make_assignment(static_cast<int>(k), std::move(la), std::move(lb));
}

ListAssignment load_lists_file(const std::string& path, int a_size, int b_size) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open " + path);
    return load_lists(in, a_size, b_size);
}

void write_stats_csv(const ListAssignment& lists, const BipartiteGraph& g,
                     std::ostream& out) {
    out << "w,Z,z,y,alpha,ell_bar\n";
    for (int w = 0; w < g.b_size(); ++w) {
        auto st = weight_stats(lists, g, Vertex::b(w));
        out << st.w << ',' << st.big_z << ',' << st.z << ',' << st.y << ',' << st.alpha
            << ',' << st.ell_bar << '\n';
    }
}

}  // namespace bipcolor
