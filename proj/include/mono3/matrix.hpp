#ifndef MONO3_MATRIX_HPP
#define MONO3_MATRIX_HPP

#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mono3 {

struct not_unimodular : std::runtime_error {
    not_unimodular() : std::runtime_error("NotUnimodular") {}
};
struct singular_matrix : std::runtime_error {
    singular_matrix() : std::runtime_error("SingularMatrix") {}
};

// 3x3 integer matrix, row-major.  a(i,j) is row i, column j (0-based).
struct IntMatrix3 {
    std::array<int64_t, 9> m{};

    static IntMatrix3 identity() { return IntMatrix3{{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }
    static IntMatrix3 of(std::initializer_list<int64_t> v) {
        IntMatrix3 r;
        int i = 0;
        for (auto x : v) r.m[i++] = x;
        if (i != 9) throw std::runtime_error("IntMatrix3 needs 9 entries");
        return r;
    }

    int64_t& at(int i, int j) { return m[i * 3 + j]; }
    int64_t at(int i, int j) const { return m[i * 3 + j]; }

    int64_t det() const {
        return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
               m[2] * (m[3] * m[7] - m[4] * m[6]);
    }
    bool unimodular() const {
        int64_t d = det();
        return d == 1 || d == -1;
    }

    friend IntMatrix3 operator*(const IntMatrix3& a, const IntMatrix3& b) {
        IntMatrix3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int64_t s = 0;
                for (int k = 0; k < 3; ++k) s += a.at(i, k) * b.at(k, j);
                r.at(i, j) = s;
            }
        return r;
    }
    IntMatrix3 operator-() const {
        IntMatrix3 r;
        for (int i = 0; i < 9; ++i) r.m[i] = -m[i];
        return r;
    }
    bool operator==(const IntMatrix3& o) const { return m == o.m; }
    bool operator<(const IntMatrix3& o) const { return m < o.m; }

    IntMatrix3 adjugate() const {
        IntMatrix3 r;
        r.at(0, 0) = m[4] * m[8] - m[5] * m[7];
        r.at(0, 1) = m[2] * m[7] - m[1] * m[8];
        r.at(0, 2) = m[1] * m[5] - m[2] * m[4];
        r.at(1, 0) = m[5] * m[6] - m[3] * m[8];
        r.at(1, 1) = m[0] * m[8] - m[2] * m[6];
        r.at(1, 2) = m[2] * m[3] - m[0] * m[5];
        r.at(2, 0) = m[3] * m[7] - m[4] * m[6];
        r.at(2, 1) = m[1] * m[6] - m[0] * m[7];
        r.at(2, 2) = m[0] * m[4] - m[1] * m[3];
        return r;
    }
    // inverse for det = +-1
    IntMatrix3 inverse() const {
        int64_t d = det();
        if (d != 1 && d != -1) throw not_unimodular();
        IntMatrix3 a = adjugate();
        if (d == -1)
            for (auto& x : a.m) x = -x;
        return a;
    }
    IntMatrix3 pow(long n) const {
        IntMatrix3 base = *this, r = identity();
        if (n < 0) {
            base = inverse();
            n = -n;
        }
        while (n) {
            if (n & 1) r = r * base;
            n >>= 1;
            if (n) base = base * base;
        }
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < 3; ++i) {
            os << "[" << at(i, 0) << "," << at(i, 1) << "," << at(i, 2) << "]";
            if (i != 2) os << ",";
        }
        os << "]";
        return os.str();
    }
};

}  // namespace mono3

#endif
