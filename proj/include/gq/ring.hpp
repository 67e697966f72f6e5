#ifndef GQ_RING_HPP
#define GQ_RING_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gq/geometry.hpp"
#include "gq/perm.hpp"
#include "gq/subgeometry.hpp"

namespace gq {

enum class IsoMode { IDEA1, IDEA2, PTRACE };

// Integer formal sum over interned class keys. Key 0 is the class of a point
// (the multiplicative unit); the empty geometry is the empty sum.
struct RingElement {
  std::map<int, long long> coeff;

  bool is_zero() const { return coeff.empty(); }
  bool operator==(const RingElement& o) const { return coeff == o.coeff; }
};

// K0(Q_l) with a fixed isomorphism notion. Class keys are interned by
// canonical certificate; concrete representatives live behind piece handles,
// which scissor cuts operate on. Cut-out pieces stay anchored at their
// pristine root ("the larger geometry defines the isomorphism"), which makes
// iterated cuts order-independent.
class Ring {
 public:
  explicit Ring(IsoMode mode) : mode_(mode) { init(); }
  IsoMode mode() const { return mode_; }

  static constexpr int kUnit = 0;
  static constexpr int kEmptyLine = 1;

  RingElement zero() const { return {}; }
  RingElement one() const;
  RingElement empty_line_class() const;

  // representative handles
  int make_root(const Geometry& g);                  // whole-geometry piece
  int make_anchored(const AnchoredSubgeometry& s);   // piece of a copied parent

  // The class of the piece behind a handle: empty-line marks split off as
  // [L^e] terms, the empty piece is 0, a bare abstract point is 1, a bare
  // abstract point set of size k is k.
  RingElement element_of(int handle);
  RingElement class_of(const Geometry& g) { return element_of(make_root(g)); }
  RingElement class_of(const AnchoredSubgeometry& s) { return element_of(make_anchored(s)); }

  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement negate(const RingElement& a) const;
  RingElement scale(const RingElement& a, long long c) const;
  RingElement mul(const RingElement& a, const RingElement& b);

  struct CutResult {
    RingElement element;     // [piece \ C] + [C], marks normalized
    int remnant_handle = -1; // piece behind [piece \ C]
    int cutout_handle = -1;  // piece behind [C], anchored at the pristine root
  };
  // Scissor relation; C is given in the view coordinates of the handle's
  // piece (points/lines of view_of(handle)). Errors: NotClosedIn.
  CutResult cut(int handle, const std::vector<int>& c_view_points,
                const std::vector<int>& c_view_lines);

  // [L^e] * [S] = |S*| [L^e]; [L^e]^2 = 0. Errors: NoRepresentative.
  RingElement empty_line_product(int key);

  // The two decompositions of [X] through a full grid and one of its lines
  // produce matching residual terms, forcing [(L,(Gamma,X))] = [(L,X)].
  bool grid_line_scissor_identity(const Geometry& x, const AnchoredSubgeometry& grid,
                                  int line_of_grid);

  Geometry view_of(int handle) const;
  int handle_point_count(int handle) const;
  int key_of(int handle);  // interned class key of the piece
  int key_point_count(int key) const;  // NoRepresentative for formal keys
  bool is_formal_key(int key) const;
  std::string key_name(int key) const;
  std::string describe(const RingElement& e) const;

 private:
  struct Piece {
    std::shared_ptr<Geometry> root;  // carries hairy marks accumulated by cuts
    std::shared_ptr<Geometry> base;  // pristine root; cut-outs anchor here
    Bitset pts, lines;  // kept root elements; lines keep >= 2 surviving points
    bool whole() const;
  };
  enum class Kind { Unit, EmptyLine, Piece_, Formal };
  struct KeyInfo {
    Kind kind;
    std::string cert;
    std::optional<Piece> exemplar;
    std::vector<int> factors;
    std::string name;
  };

  IsoMode mode_;
  std::vector<Piece> reps_;
  std::vector<KeyInfo> keys_;
  std::map<std::string, int> intern_;
  std::map<const Geometry*, std::shared_ptr<PermGroup>> aut_cache_;
  struct Idea2Entry {
    std::string profile;
    PermGroup induced;
  };
  std::vector<Idea2Entry> idea2_;

  void init();
  int intern(KeyInfo info);
  int key_of_piece(const Piece& p);
  std::string piece_cert(const Piece& p);
  RingElement term_of_piece(const Piece& p, int empty_marks, int* handle_out);
  const PermGroup& aut_of(const Geometry* root);
  RingElement mul_keys(int a, int b);
};

}  // namespace gq

#endif
