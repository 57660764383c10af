#pragma once

#include <cstddef>
#include <new>
#include <vector>

namespace lzscan {

// Bytes held by AuxAllocator on the calling thread. The driver reads the peak
// to report working memory; each parse runs on one thread.
struct AuxUsage {
  std::size_t live = 0;
  std::size_t peak = 0;
};

AuxUsage& aux_usage() noexcept;

// Blocks of at least kHugePage bytes are mapped directly, aligned to it and
// advised for transparent huge pages, which keeps TLB misses down once a
// window outgrows the TLB reach. Unmapping on release keeps the resident set
// from growing across windows.
inline constexpr std::size_t kHugePage = std::size_t{2} << 20;

void* map_pages(std::size_t bytes);
void unmap_pages(void* p, std::size_t bytes) noexcept;

// Allocator for the parser's working containers.
template <class T>
struct AuxAllocator {
  using value_type = T;

  AuxAllocator() = default;
  template <class U>
  AuxAllocator(const AuxAllocator<U>&) noexcept {}

  T* allocate(std::size_t n) {
    const std::size_t bytes = n * sizeof(T);
    void* p = bytes < kHugePage ? ::operator new(bytes) : map_pages(bytes);
    AuxUsage& u = aux_usage();
    u.live += bytes;
    if (u.live > u.peak) u.peak = u.live;
    return static_cast<T*>(p);
  }
  void deallocate(T* p, std::size_t n) noexcept {
    const std::size_t bytes = n * sizeof(T);
    aux_usage().live -= bytes;
    if (bytes < kHugePage) ::operator delete(p);
    else unmap_pages(p, bytes);
  }

  template <class U>
  bool operator==(const AuxAllocator<U>&) const noexcept {
    return true;
  }
};

template <class T>
using aux_vector = std::vector<T, AuxAllocator<T>>;

}  // namespace lzscan
