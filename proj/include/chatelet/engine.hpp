#ifndef CHATELET_ENGINE_HPP
#define CHATELET_ENGINE_HPP

namespace chatelet {

// Every enumeration kernel comes in two builds: a fast fixed-precision one
// (int64/int128 arithmetic, OpenMP where it pays) and a serial reference that
// stays in exact rational arithmetic. Tests drive both and compare.
enum class Engine { Fast, Reference };

}  // namespace chatelet

#endif
