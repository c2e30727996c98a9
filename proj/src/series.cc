#include "shq/series.hh"

namespace shq {

tseries<cplx> to_complex(const tseries<rat>& s)
{
    tseries<cplx> r(s.order());
    for (std::size_t i = 0; i <= s.order(); ++i) r[i] = to_cplx(s[i]);
    return r;
}

template class tseries<rat>;
template class tseries<cplx>;

} // namespace shq
