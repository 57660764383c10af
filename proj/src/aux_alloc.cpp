#include "lzscan/aux_alloc.hpp"

#include <cstdint>

#if defined(__linux__)
#include <sys/mman.h>
#endif

namespace lzscan {

AuxUsage& aux_usage() noexcept {
  thread_local AuxUsage u;
  return u;
}

#if defined(__linux__)

namespace {
constexpr std::size_t kPage = 4096;
std::size_t page_round(std::size_t bytes) { return (bytes + kPage - 1) & ~(kPage - 1); }
}  // namespace

void* map_pages(std::size_t bytes) {
  const std::size_t len = page_round(bytes);
  // Over-map by one huge page and trim both ends to get an aligned start.
  void* raw = mmap(nullptr, len + kHugePage, PROT_READ | PROT_WRITE, MAP_PRIVATE | MAP_ANONYMOUS, -1, 0);
  if (raw == MAP_FAILED) throw std::bad_alloc();
  const auto base = reinterpret_cast<std::uintptr_t>(raw);
  const std::uintptr_t start = (base + kHugePage - 1) & ~(kHugePage - 1);
  if (start > base) munmap(raw, start - base);
  if (const std::size_t tail = base + len + kHugePage - (start + len)) munmap(reinterpret_cast<void*>(start + len), tail);
  // Advice only; failure leaves ordinary pages.
  madvise(reinterpret_cast<void*>(start), len, MADV_HUGEPAGE);
  return reinterpret_cast<void*>(start);
}

void unmap_pages(void* p, std::size_t bytes) noexcept { munmap(p, page_round(bytes)); }

#else

void* map_pages(std::size_t bytes) { return ::operator new(bytes, std::align_val_t{kHugePage}); }
void unmap_pages(void* p, std::size_t) noexcept { ::operator delete(p, std::align_val_t{kHugePage}); }

#endif

}  // namespace lzscan
