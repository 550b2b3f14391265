#include "remnet/action.hpp"

#include <bit>
#include <stdexcept>

namespace remnet {

Action::Action(std::uint32_t bits, int pbs_count) : bits_(bits), pbs_count_(pbs_count) {
    if (pbs_count < 1 || pbs_count > kMaxPbsCount) {
        throw std::invalid_argument("pbs_count out of range");
    }
    if (bits >= table_size(pbs_count)) {
        throw std::invalid_argument("action bits exceed pbs_count");
    }
}

Action Action::all_on(int pbs_count) {
    return Action(table_size(pbs_count) - 1, pbs_count);
}

Action Action::all_off(int pbs_count) {
    return Action(0, pbs_count);
}

std::uint32_t Action::table_size(int pbs_count) {
    if (pbs_count < 1 || pbs_count > kMaxPbsCount) {
        throw std::invalid_argument("pbs_count out of range");
    }
    return 1u << pbs_count;
}

bool Action::pbs_active(int pbs) const {
    if (pbs < 0 || pbs >= pbs_count_) {
        throw std::out_of_range("pbs index out of range");
    }
    return (bits_ >> pbs) & 1u;
}

int Action::active_count() const noexcept {
    return std::popcount(bits_);
}

bool Action::is_all_on() const noexcept {
    return pbs_count_ > 0 && bits_ == (1u << pbs_count_) - 1;
}

std::string to_string(const Action& action) {
    std::string s(static_cast<std::size_t>(action.pbs_count()), '0');
    for (int b = 0; b < action.pbs_count(); ++b) {
        if (action.pbs_active(b)) s[static_cast<std::size_t>(b)] = '1';
    }
    return s;
}

} // namespace remnet
