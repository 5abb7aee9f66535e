from apps.exact.legendre import legendre_explicit
from apps.exact.ratios import legendre_gf_series, ratio_closed_form, ratio_gf_series
from apps.reports.base import VerificationFailed, VolumesCommand


class Command(VolumesCommand):
    help = 'Коэффициенты производящей функции V_1(z) и их сверка с явной формулой'
    subcommand = 'series'

    def add_arguments(self, parser):
        parser.add_argument('--terms', type=int, default=20, help='Число коэффициентов')

    def handle(self, *args, **options):
        terms = self.validate(terms=options['terms']).validated_data['terms']
        if not terms:
            return
        ratios = ratio_gf_series(terms - 1)
        delannoy = legendre_gf_series(3, terms)
        mismatches = 0
        self.stdout.write('d\tr_d\tP_d(3)\tok')
        for d in range(terms):
            ok = ratios[d] == ratio_closed_form(d) and delannoy[d] == legendre_explicit(d, 3)
            mismatches += not ok
            self.stdout.write(f"{d}\t{ratios[d]}\t{delannoy[d]}\t{'ok' if ok else 'MISMATCH'}")
        if mismatches:
            raise VerificationFailed(f"коэффициентов с расхождением: {mismatches}")
