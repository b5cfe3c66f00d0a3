#include "cobcoh/expand.hpp"

#include <vector>

#include "cobcoh/tree.hpp"
#include "cobcoh/typecheck.hpp"

namespace cobcoh {

Arrow hom_contravariant(const Arrow& f, const Object& a, const Object& a_prime,
                        const Object& b) {
  Object hom_ab = Object::lollipop(a_prime, b);
  Arrow eta = Arrow::eta_smc(a, hom_ab);
  Arrow middle = Arrow::whisker(a, Arrow::tensor(f, Arrow::id(hom_ab)));
  Arrow eps = Arrow::whisker(a, Arrow::eps_smc(a_prime, b));
  return Arrow::compose(eps, Arrow::compose(middle, eta));
}

Arrow dual_arrow(const Arrow& f, const Object& a, const Object& b) {
  Object da = Object::dual(a);
  Object db = Object::dual(b);
  // b* -> I (x) b* -> (a* (x) a) (x) b* -> a* (x) (a (x) b*)
  //    -> a* (x) (b (x) b*) -> a* (x) I -> I (x) a* -> a*
  const Arrow steps[] = {
      Arrow::lambda(da),
      Arrow::sigma(da, Object::unit()),
      Arrow::tensor(Arrow::id(da), Arrow::eps_cc(b)),
      Arrow::tensor(Arrow::id(da), Arrow::tensor(f, Arrow::id(db))),
      Arrow::alpha_inv(da, a, db),
      Arrow::tensor(Arrow::eta_cc(a), Arrow::id(db)),
      Arrow::lambda_inv(db),
  };
  return compose_all(steps);
}

namespace {

struct Expanded {
  Arrow term;
  ArrowType type;
};

Arrow rebuild(const Arrow& n, std::span<Expanded> kids) {
  bool same = true;
  std::vector<Arrow> ks;
  ks.reserve(kids.size());
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (kids[i].term.node_id() != n.child(i).node_id()) same = false;
    ks.push_back(kids[i].term);
  }
  if (same) return n;
  return Arrow::make(n.kind(),
                     std::vector<Object>(n.objects().begin(), n.objects().end()),
                     std::move(ks));
}

}  // namespace

Arrow expand_derived(const Arrow& t, Mode mode) {
  infer_type(t, mode);
  return tree::fold<Expanded>(
             t,
             [mode](const Arrow& n, std::span<Expanded> kids) -> Expanded {
               ArrowType ty;
               switch (n.kind()) {
                 case ArrowKind::Compose:
                   ty = {kids[1].type.source, kids[0].type.target};
                   break;
                 case ArrowKind::Plus:
                   ty = kids[0].type;
                   break;
                 case ArrowKind::Tensor:
                   ty = {Object::tensor(kids[0].type.source, kids[1].type.source),
                         Object::tensor(kids[0].type.target, kids[1].type.target)};
                   break;
                 case ArrowKind::Oplus:
                   ty = {Object::oplus(kids[0].type.source, kids[1].type.source),
                         Object::oplus(kids[0].type.target, kids[1].type.target)};
                   break;
                 case ArrowKind::Whisker:
                   ty = {Object::lollipop(n.object(0), kids[0].type.source),
                         Object::lollipop(n.object(0), kids[0].type.target)};
                   break;
                 case ArrowKind::HomMap: {
                   const Object& a = kids[0].type.source;
                   const Object& a_prime = kids[0].type.target;
                   const Object& b = kids[1].type.source;
                   const Object& b_prime = kids[1].type.target;
                   ty = {Object::lollipop(a_prime, b),
                         Object::lollipop(a, b_prime)};
                   const Arrow& f = kids[0].term;
                   const Arrow& g = kids[1].term;
                   if (f.is(ArrowKind::Id)) return {Arrow::whisker(a, g), ty};
                   Arrow contra = hom_contravariant(f, a, a_prime, b);
                   if (g.is(ArrowKind::Id)) return {contra, ty};
                   return {Arrow::compose(Arrow::whisker(a, g), contra), ty};
                 }
                 case ArrowKind::Dagger:
                   ty = {kids[0].type.target, kids[0].type.source};
                   break;
                 default: {
                   ty = generator_type(n);
                   if (mode != Mode::Dccb) return {n, ty};
                   auto o = n.objects();
                   switch (n.kind()) {
                     case ArrowKind::AlphaInv:
                       return {Arrow::dagger(Arrow::alpha(o[0], o[1], o[2])), ty};
                     case ArrowKind::LambdaInv:
                       return {Arrow::dagger(Arrow::lambda(o[0])), ty};
                     case ArrowKind::EtaCc:
                       return {Arrow::compose(
                                   Arrow::sigma(o[0], Object::dual(o[0])),
                                   Arrow::dagger(Arrow::eps_cc(o[0]))),
                               ty};
                     case ArrowKind::Inj1:
                       return {Arrow::dagger(Arrow::proj1(o[0], o[1])), ty};
                     case ArrowKind::Inj2:
                       return {Arrow::dagger(Arrow::proj2(o[0], o[1])), ty};
                     default:
                       return {n, ty};
                   }
                 }
               }
               return {rebuild(n, kids), ty};
             })
      .term;
}

}  // namespace cobcoh
