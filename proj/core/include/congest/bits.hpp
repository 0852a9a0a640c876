#ifndef CONGEST_BITS_HPP
#define CONGEST_BITS_HPP

#include <cstdint>
#include <vector>

#include "congest/graph.hpp"

namespace congest {

// Packed bit sequence with exact length; bits within a value are written
// most-significant first.
class BitString {
public:
    std::size_t size_bits() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    bool bit(std::size_t i) const {
        return (bytes_[i >> 3] >> (7 - (i & 7))) & 1u;
    }

    void push_back(bool b) {
        if ((nbits_ & 7) == 0) bytes_.push_back(0);
        if (b) bytes_[nbits_ >> 3] |= static_cast<std::uint8_t>(1u << (7 - (nbits_ & 7)));
        ++nbits_;
    }

    void append(const BitString& other) {
        for (std::size_t i = 0; i < other.nbits_; ++i) push_back(other.bit(i));
    }

    void append_uint(std::uint64_t value, int width);

    bool operator==(const BitString& other) const {
        if (nbits_ != other.nbits_) return false;
        for (std::size_t i = 0; i < nbits_; ++i) {
            if (bit(i) != other.bit(i)) return false;
        }
        return true;
    }

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t nbits_ = 0;
};

class BitReader {
public:
    explicit BitReader(const BitString& s) : s_(&s) {}

    std::uint64_t read_uint(int width);
    void skip(std::size_t bits);
    std::size_t position() const { return pos_; }
    void seek(std::size_t pos);
    std::size_t remaining() const { return s_->size_bits() - pos_; }

private:
    const BitString* s_;
    std::size_t pos_ = 0;
};

}  // namespace congest

#endif
