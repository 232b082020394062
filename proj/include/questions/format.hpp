#ifndef QUESTIONS_FORMAT_HPP
#define QUESTIONS_FORMAT_HPP

#include <string>

namespace questions {

/// Shortest round-trip decimal representation, capped at 14 significant
/// digits. Used for all CLI and figure-file numeric output.
std::string format_double(double value);

}  // namespace questions

#endif
