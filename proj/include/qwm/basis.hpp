#pragma once

#include <cstdlib>
#include <stdexcept>

// Basis encodings for the three walk flavours. A state of the order-3 walk
// records the two previous positions and the coin:
//
//   |n3, n2, n1, p>  ->  j = 2*n1 - n2 - n3 + p + 3
//
// which lays the eight basis states out as j = 4*[dr1=R] + 2*[dr2=R] + p,
// where dr1 is the direction of the last move and dr2 the one before it
// (L = position decreased, R = increased). One-step memory uses
// j = 2*[dr1=R] + p, no memory uses j = p.

namespace qwm {

enum class Dir : int { L = 0, R = 1 };

inline Dir opposite(Dir d) { return d == Dir::L ? Dir::R : Dir::L; }
inline int shift_of(Dir d) { return d == Dir::L ? -1 : +1; }

// Direction of a move from position `from` to adjacent position `to`.
inline Dir dir_of_move(long long from, long long to) {
  if (to == from - 1) return Dir::L;
  if (to == from + 1) return Dir::R;
  throw std::invalid_argument("dir_of_move: positions not adjacent");
}

struct OriginalState {
  long long n3 = 0;  // position two steps ago
  long long n2 = 0;  // position one step ago
  long long n1 = 0;  // current position
  int p = 0;         // coin
};

inline int basis_count(int memory_order) {
  switch (memory_order) {
    case 0: return 2;
    case 1: return 4;
    case 2: return 8;
    default: throw std::invalid_argument("memory order must be 0, 1 or 2");
  }
}

inline int basis_index(Dir dr2, Dir dr1, int p) {
  return 4 * static_cast<int>(dr1) + 2 * static_cast<int>(dr2) + p;
}
inline int basis_index(Dir dr1, int p) { return 2 * static_cast<int>(dr1) + p; }

inline int encode_basis(const OriginalState& s) {
  if (std::abs(s.n3 - s.n2) != 1 || std::abs(s.n2 - s.n1) != 1)
    throw std::invalid_argument("encode_basis: consecutive positions must differ by 1");
  if (s.p != 0 && s.p != 1)
    throw std::invalid_argument("encode_basis: coin must be 0 or 1");
  return static_cast<int>(2 * s.n1 - s.n2 - s.n3 + s.p + 3);
}

inline OriginalState decode_basis(int j, long long k) {
  if (j < 0 || j > 7) throw std::invalid_argument("decode_basis: index out of range");
  OriginalState s;
  s.p = j % 2;
  s.n1 = k;
  s.n2 = s.n1 - (j - j % 4) / 2 + 1;
  s.n3 = s.n2 - j % 4 + j % 2 + 1;
  return s;
}

}  // namespace qwm
