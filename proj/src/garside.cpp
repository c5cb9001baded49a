#include "spherica/garside.hpp"

#include <algorithm>
#include <sstream>

namespace spherica {

namespace {

std::vector<BraidLetter> free_reduce(const std::vector<BraidLetter>& letters)
{
    std::vector<BraidLetter> stack;
    for (const auto& l : letters) {
        if (!stack.empty() && stack.back().node == l.node && stack.back().sign == -l.sign)
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return stack;
}

}  // namespace

BraidWord::BraidWord(DynkinDiagram d, std::vector<BraidLetter> letters)
    : diagram_(std::move(d)), letters_(std::move(letters))
{
    for (const auto& l : letters_) {
        if (l.node < 1 || l.node > diagram_.rank())
            throw WordParseError("letter node out of range: " + std::to_string(l.node));
        if (l.sign != 1 && l.sign != -1)
            throw WordParseError("letter sign must be +1 or -1");
    }
}

BraidWord BraidWord::parse(const DynkinDiagram& d, const std::string& text)
{
    std::istringstream in(text);
    std::vector<BraidLetter> letters;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw WordParseError("bad word token: '" + tok + "'");
        }
        if (used != tok.size())
            throw WordParseError("bad word token: '" + tok + "'");
        if (v == 0)
            throw WordParseError("word letters are nonzero signed node indices");
        letters.push_back({std::abs(v), v > 0 ? 1 : -1});
    }
    return BraidWord(d, std::move(letters));
}

bool BraidWord::positive() const
{
    return std::all_of(letters_.begin(), letters_.end(),
                       [](const BraidLetter& l) { return l.sign == 1; });
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const
{
    if (diagram_ != rhs.diagram_)
        throw std::invalid_argument("braid words over different diagrams");
    auto letters = letters_;
    letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
    return BraidWord(diagram_, std::move(letters));
}

BraidWord BraidWord::inverse() const
{
    std::vector<BraidLetter> letters(letters_.rbegin(), letters_.rend());
    for (auto& l : letters)
        l.sign = -l.sign;
    return BraidWord(diagram_, std::move(letters));
}

std::string BraidWord::str() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i)
            out << ' ';
        out << letters_[i].sign * letters_[i].node;
    }
    return out.str();
}

BraidWord lift(const WeylElement& w)
{
    std::vector<BraidLetter> letters;
    for (int i : reduced_word(w))
        letters.push_back({i, 1});
    return BraidWord(w.diagram(), std::move(letters));
}

WeylElement project(const BraidWord& word)
{
    auto w = WeylElement::identity(word.diagram());
    for (const auto& l : word.letters())
        w = w * WeylElement::generator(word.diagram(), l.node);
    return w;
}

bool is_normal_pair(const WeylElement& u, const WeylElement& v)
{
    if (u.diagram() != v.diagram())
        throw std::invalid_argument("Weyl elements over different diagrams");
    auto ld = v.left_descents();
    for (int i : u.right_descents())
        if (!std::binary_search(ld.begin(), ld.end(), i))
            return false;
    return true;
}

bool left_factor_generator(const WeylElement& w, int node)
{
    auto ld = w.left_descents();
    return std::binary_search(ld.begin(), ld.end(), node);
}

std::vector<WeylElement> normalize_positive(const BraidWord& word)
{
    if (!word.positive())
        throw std::invalid_argument("normalize_positive requires a positive word");
    const auto& d = word.diagram();
    std::vector<WeylElement> f;
    f.reserve(word.size());
    for (const auto& l : word.letters())
        f.push_back(WeylElement::generator(d, l.node));

    // Bubble passes of the local fix: while some right descent t of the left
    // factor lengthens the right factor, move the letter across.  Identity
    // factors are dropped between sweeps; iterate to the global fixpoint.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int j = static_cast<int>(f.size()) - 2; j >= 0; --j) {
            while (true) {
                auto ld = f[j + 1].left_descents();
                int pick = 0;
                for (int t : f[j].right_descents())
                    if (!std::binary_search(ld.begin(), ld.end(), t)) {
                        pick = t;
                        break;
                    }
                if (pick == 0)
                    break;
                f[j] = strip_right(f[j], pick);
                f[j + 1] = WeylElement::generator(d, pick) * f[j + 1];
                changed = true;
            }
        }
        auto it = std::remove_if(f.begin(), f.end(),
                                 [](const WeylElement& w) { return w.is_identity(); });
        if (it != f.end()) {
            f.erase(it, f.end());
            changed = true;
        }
    }
    return f;
}

GarsideNormalForm normalize(const BraidWord& word)
{
    const auto& d = word.diagram();
    auto letters = free_reduce(word.letters());
    auto star = w0_automorphism(d);
    auto w0 = longest_element(d);

    // Scan left to right keeping the invariant (braid so far) = Delta^m * P
    // with P positive: sigma_i^{-1} = Delta^{-1} lift(w0 s_i), and pulling the
    // new Delta^{-1} through P relabels P by the w0 automorphism.
    int m = 0;
    std::vector<int> pos;
    for (const auto& l : letters) {
        if (l.sign > 0) {
            pos.push_back(l.node);
        } else {
            for (int& n : pos)
                n = star[n - 1];
            --m;
            for (int n : reduced_word(strip_right(w0, l.node)))
                pos.push_back(n);
        }
    }
    // Move Delta^m to the right of P: P Delta^m with P relabeled |m| times.
    if (m % 2 != 0)
        for (int& n : pos)
            n = star[n - 1];

    std::vector<BraidLetter> pletters;
    pletters.reserve(pos.size());
    for (int n : pos)
        pletters.push_back({n, 1});
    auto factors = normalize_positive(BraidWord(d, std::move(pletters)));
    while (!factors.empty() && factors.back() == w0) {
        factors.pop_back();
        ++m;
    }
    return {d, m, std::move(factors)};
}

bool equals(const BraidWord& a, const BraidWord& b)
{
    if (a.diagram() != b.diagram())
        throw std::invalid_argument("braid words over different diagrams");
    return normalize(a) == normalize(b);
}

BraidWord delta(const DynkinDiagram& d)
{
    return lift(longest_element(d));
}

BraidWord tau(const BraidWord& word)
{
    auto star = w0_automorphism(word.diagram());
    auto letters = word.letters();
    for (auto& l : letters)
        l.node = star[l.node - 1];
    return BraidWord(word.diagram(), std::move(letters));
}

BraidWord GarsideNormalForm::to_word() const
{
    std::vector<BraidLetter> letters;
    for (const auto& w : factors)
        for (int i : reduced_word(w))
            letters.push_back({i, 1});
    if (delta_power != 0) {
        auto dw = reduced_word(longest_element(diagram));
        if (delta_power > 0) {
            for (int k = 0; k < delta_power; ++k)
                for (int i : dw)
                    letters.push_back({i, 1});
        } else {
            for (int k = 0; k < -delta_power; ++k)
                for (auto it = dw.rbegin(); it != dw.rend(); ++it)
                    letters.push_back({*it, -1});
        }
    }
    return BraidWord(diagram, std::move(letters));
}

std::string GarsideNormalForm::str() const
{
    std::ostringstream out;
    out << "D^" << delta_power << " |";
    for (const auto& w : factors) {
        out << " [";
        auto word = reduced_word(w);
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (i)
                out << ' ';
            out << word[i];
        }
        out << ']';
    }
    return out.str();
}

}  // namespace spherica
