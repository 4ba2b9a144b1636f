#ifndef DCONSEC_COMPOSITIONS_HPP
#define DCONSEC_COMPOSITIONS_HPP

#include <cstddef>
#include <iterator>
#include <numeric>
#include <vector>

namespace dconsec {

// Ordered list of positive integers with a prescribed sum. The empty list is
// the unique composition of 0 into 0 parts.
using Composition = std::vector<int>;

// Function from part indices {0..c-1} to block indices {0..d-1}; blocks may
// be empty.
using BlockAssignment = std::vector<int>;

/* Range over all compositions of `total` into exactly `parts` parts >= 1, in
 * lexicographic order ([1,1,3] before [1,2,2] before [1,3,1] ...). Yields one
 * empty composition when total == parts == 0 and nothing when parts == 0 <
 * total or total < parts. The element count is always C(total-1, parts-1)
 * under the conventions of int_types.hpp.
 *
 * Single-consumer forward range; each worker should create its own.
 */
class CompositionRange {
public:
    CompositionRange(int total, int parts) : total_(total), parts_(parts) {}

    class const_iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Composition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Composition*;
        using reference = const Composition&;

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }

        const_iterator& operator++()
        {
            advance();
            return *this;
        }

        bool operator==(const const_iterator& other) const
        {
            if (at_end_ || other.at_end_)
                return at_end_ == other.at_end_;
            return current_ == other.current_;
        }
        bool operator!=(const const_iterator& other) const { return !(*this == other); }

    private:
        friend class CompositionRange;

        const_iterator() = default;  // end

        const_iterator(int total, int parts)
        {
            if (parts == 0) {
                at_end_ = total != 0;
                return;
            }
            if (total < parts)
                return;
            current_.assign(static_cast<size_t>(parts), 1);
            current_.back() = total - parts + 1;
            at_end_ = false;
        }

        void advance()
        {
            // successor: bump the rightmost position whose suffix has slack,
            // then reset the suffix to its lexicographically smallest form
            const int c = static_cast<int>(current_.size());
            if (c == 0) {
                at_end_ = true;
                return;
            }
            int tail_sum = current_[static_cast<size_t>(c) - 1];
            for (int j = c - 2; j >= 0; --j) {
                const int m = c - 1 - j;  // suffix length after j
                if (tail_sum > m) {
                    ++current_[static_cast<size_t>(j)];
                    for (int i = j + 1; i < c - 1; ++i)
                        current_[static_cast<size_t>(i)] = 1;
                    current_[static_cast<size_t>(c) - 1] = tail_sum - 1 - (m - 1);
                    return;
                }
                tail_sum += current_[static_cast<size_t>(j)];
            }
            at_end_ = true;
        }

        Composition current_;
        bool at_end_ = true;
    };

    const_iterator begin() const { return const_iterator(total_, parts_); }
    const_iterator end() const { return const_iterator(); }

private:
    int total_;
    int parts_;
};

/* Range over all blocks^count assignment vectors in lexicographic order
 * ((0,0), (0,1), (1,0), (1,1) for count = blocks = 2). For count == 0 yields
 * the single empty assignment, also when blocks == 0.
 */
class BlockAssignmentRange {
public:
    BlockAssignmentRange(int count, int blocks) : count_(count), blocks_(blocks) {}

    class const_iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = BlockAssignment;
        using difference_type = std::ptrdiff_t;
        using pointer = const BlockAssignment*;
        using reference = const BlockAssignment&;

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }

        const_iterator& operator++()
        {
            advance();
            return *this;
        }

        bool operator==(const const_iterator& other) const
        {
            if (at_end_ || other.at_end_)
                return at_end_ == other.at_end_;
            return current_ == other.current_;
        }
        bool operator!=(const const_iterator& other) const { return !(*this == other); }

    private:
        friend class BlockAssignmentRange;

        const_iterator() = default;  // end

        const_iterator(int count, int blocks) : blocks_(blocks)
        {
            if (count > 0 && blocks == 0)
                return;  // no functions into an empty codomain
            current_.assign(static_cast<size_t>(count), 0);
            at_end_ = false;
        }

        void advance()
        {
            // odometer increment, least significant digit last
            for (size_t i = current_.size(); i-- > 0;) {
                if (++current_[i] < blocks_)
                    return;
                current_[i] = 0;
            }
            at_end_ = true;
        }

        BlockAssignment current_;
        int blocks_ = 0;
        bool at_end_ = true;
    };

    const_iterator begin() const { return const_iterator(count_, blocks_); }
    const_iterator end() const { return const_iterator(); }

private:
    int count_;
    int blocks_;
};

}  // namespace dconsec

#endif
