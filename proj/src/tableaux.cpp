#include "plethy/tableaux.hpp"

#include <functional>
#include <numeric>

#include "plethy/error.hpp"

namespace plethy {

namespace {

// Backtracking fill in row-major cell order, always trying the smallest
// entry first. The emitted sequence is therefore sorted by the row reading
// word. Pruning: an entry in row r must be >= r+1 (column strictness above
// forces it), so letters with too little remaining supply cut off early.
struct SsytSearch {
    const std::vector<int>& shape;
    std::vector<int> remaining;           // per letter, 1-based letters
    std::vector<std::vector<int>> rows;
    const std::function<void(const std::vector<std::vector<int>>&)>& sink;

    void run() {
        if (shape.empty()) {
            sink(rows);
            return;
        }
        fill(0, 0);
    }

    void fill(int r, int c) {
        const int nrows = static_cast<int>(shape.size());
        if (r == nrows) {
            sink(rows);
            return;
        }
        int next_r = r, next_c = c + 1;
        if (next_c == shape[static_cast<size_t>(r)]) {
            next_r = r + 1;
            next_c = 0;
        }
        const int letters = static_cast<int>(remaining.size());
        int lo = 1;
        if (c > 0) lo = std::max(lo, rows[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
        if (r > 0) lo = std::max(lo, rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
        else lo = std::max(lo, 1);
        lo = std::max(lo, r + 1);  // column above needs r distinct smaller entries
        for (int v = lo; v <= letters; ++v) {
            if (remaining[static_cast<size_t>(v - 1)] == 0) continue;
            --remaining[static_cast<size_t>(v - 1)];
            rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            fill(next_r, next_c);
            ++remaining[static_cast<size_t>(v - 1)];
        }
    }
};

void for_each_ssyt(const Partition& shape, const std::vector<int>& content,
                   const std::function<void(const std::vector<std::vector<int>>&)>& sink) {
    long long total = 0;
    for (int c : content) {
        if (c < 0) throw domain_error("content entries must be nonnegative");
        total += c;
    }
    if (total != shape.size())
        throw domain_error("content sum must equal the shape size");

    std::vector<std::vector<int>> rows;
    for (int r = 0; r < shape.length(); ++r)
        rows.emplace_back(static_cast<size_t>(shape.part(r)), 0);

    SsytSearch search{shape.parts(), content, std::move(rows), sink};
    search.run();
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const std::vector<int>& content) {
    std::vector<Tableau> out;
    for_each_ssyt(shape, content,
                  [&](const std::vector<std::vector<int>>& rows) { out.push_back(Tableau{rows}); });
    return out;
}

long long kostka(const Partition& shape, const std::vector<int>& content) {
    long long count = 0;
    for_each_ssyt(shape, content, [&](const std::vector<std::vector<int>>&) { ++count; });
    return count;
}

}  // namespace plethy
