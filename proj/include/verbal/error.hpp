#ifndef VERBAL_ERROR_HPP
#define VERBAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace verbal {

// Error categories, mapped to CLI exit codes (parse/usage -> 2, the rest -> 1).
enum class ErrorKind {
  parse,        // malformed input text
  domain,       // argument outside the operation's domain
  budget,       // an enumeration would exceed its configured budget
  unsupported,  // input shape the procedure deliberately rejects
  internal,     // a verified invariant failed; indicates a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

// Invariant checks that must survive NDEBUG builds: the collection and
// decomposition routines rely on these as run-time proofs, not debug aids.
inline void check(bool cond, const std::string& msg) {
  if (!cond) throw Error(ErrorKind::internal, msg);
}

}  // namespace verbal

#endif
