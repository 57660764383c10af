#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

// Input families shared by the unit tests and the acceptance run.
namespace gen {

inline char symbol(unsigned k, unsigned sigma) {
  // sigma 256 covers every byte value
  return sigma >= 256 ? static_cast<char>(k & 0xFF) : static_cast<char>('a' + k % sigma);
}

inline std::string uniform(std::mt19937_64& rng, std::size_t n, unsigned sigma) {
  std::string s(n, 'a');
  for (char& c : s) c = symbol(static_cast<unsigned>(rng() % sigma), sigma);
  return s;
}

// A short random period repeated, with occasional point mutations.
inline std::string periodic(std::mt19937_64& rng, std::size_t n, unsigned sigma) {
  std::size_t period = 1 + rng() % 12;
  std::string base = uniform(rng, period, sigma);
  std::string s;
  while (s.size() < n) {
    s += base;
    if (rng() % 16 == 0) s += symbol(static_cast<unsigned>(rng() % sigma), sigma);
  }
  s.resize(n);
  return s;
}

// Prefix of the Fibonacci word over two symbols picked from the alphabet.
inline std::string fibonacci(std::mt19937_64& rng, std::size_t n, unsigned sigma) {
  char x = symbol(static_cast<unsigned>(rng() % sigma), sigma), y = x;
  while (sigma > 1 && y == x) y = symbol(static_cast<unsigned>(rng() % sigma), sigma);
  std::string a(1, x), b{x, y};
  while (b.size() < n) {
    std::string c = b + a;
    a = std::move(b);
    b = std::move(c);
  }
  b.resize(n);
  return b;
}

// Many runs and squares: random blocks each repeated a few times.
inline std::string run_rich(std::mt19937_64& rng, std::size_t n, unsigned sigma) {
  std::string s;
  while (s.size() < n) {
    std::string piece = uniform(rng, 1 + rng() % 6, sigma);
    std::size_t reps = 2 + rng() % 5;
    for (std::size_t k = 0; k < reps; ++k) s += piece;
    if (rng() % 3 == 0 && !s.empty()) {
      std::size_t back = rng() % s.size();
      s += s.substr(back, std::min<std::size_t>(rng() % 40, s.size() - back));
    }
  }
  s.resize(n);
  return s;
}

// Zipf-distributed words with sentence breaks, a stand-in for prose.
inline std::string prose(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  const std::string letters = "etaoinshrdlcumwfgypbvkjxqz";
  std::vector<std::string> words(6000);
  for (auto& w : words) {
    std::size_t len = 1 + rng() % 4 + rng() % 5;
    for (std::size_t k = 0; k < len; ++k) {
      // skew toward frequent letters
      std::size_t i = static_cast<std::size_t>(std::pow(static_cast<double>(rng() % 1000) / 1000.0, 2.0) * letters.size());
      w += letters[i];
    }
  }
  std::vector<double> weights(words.size());
  for (std::size_t k = 0; k < weights.size(); ++k) weights[k] = 1.0 / static_cast<double>(k + 1);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::string s;
  s.reserve(n + 64);
  std::size_t in_sentence = 0;
  while (s.size() < n) {
    std::string w = words[pick(rng)];
    if (in_sentence == 0) w[0] = static_cast<char>(w[0] - 'a' + 'A');
    s += w;
    if (++in_sentence > 6 + rng() % 14) {
      s += rng() % 5 == 0 ? ".\n" : ". ";
      in_sentence = 0;
    } else {
      s += rng() % 12 == 0 ? ", " : " ";
    }
  }
  s.resize(n);
  return s;
}

}  // namespace gen
