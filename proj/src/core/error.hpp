#ifndef GRASMULT_CORE_ERROR_HPP
#define GRASMULT_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace grasmult {

enum class errc {
  invalid_argument = 1,
  not_on_variety = 2,
  budget_exceeded = 3,
  chain_violation = 4,
  internal = 5,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

// Search budget, counted in visited search-tree nodes.
inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

}  // namespace grasmult

#endif
