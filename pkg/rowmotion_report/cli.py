"""
Interface de linha de comando (CLI) para rowmotion, RSK birracional e a suíte
de verificação.

Saída em JSON no stdout; logs no stderr. Códigos de saída: 0 sucesso,
1 falha de verificação ou erro inesperado, 2 erro de uso.
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional

from rowmotion_report.algebra import BIRATIONAL, format_rational, parse_rational, tropical_algebra
from rowmotion_report.closed_form import power_labeling, rho_power_any
from rowmotion_report.dynamics import OrbitTable, shifted_labeling, transfer_inverse
from rowmotion_report.export import (
    export_to_csv,
    export_verification,
    orbit_table_dataframe,
    orbit_table_records,
    report_to_dataframe,
)
from rowmotion_report.io import (
    dumps,
    labeling_to_json,
    load_chain_sum_profile,
    load_labeling,
    minor_array_to_json,
)
from rowmotion_report.paths import CheckReport, minors_of
from rowmotion_report.poset import Rect
from rowmotion_report.rsk import (
    birational_rsk,
    chain_shift_check,
    chain_shift_rsk_check,
    greene_check,
    reconstruct_from_chain_sums,
    rsk_procedure,
)
from rowmotion_report.st_words import birational_st, generalized_st
from rowmotion_report.suite import SuiteConfig, run_suite
from rowmotion_report.utils import RowmotionError, parse_pair_key

# Configurar logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    datefmt='%Y-%m-%d %H:%M:%S'
)
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    """Monta o parser com um subcomando por operação."""
    parser = argparse.ArgumentParser(
        prog='rowmotion_report',
        description='Rowmotion birracional, linear por partes e combinatório em retângulos [r]×[s]',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Exemplos de uso:
  python -m rowmotion_report orbit --labels dados/primos_2x3.json --power -2 --cell 2,2
  python -m rowmotion_report stword --labels dados/primos_2x3.json --row 1
  python -m rowmotion_report rsk --labels dados/primos_2x3.json
  python -m rowmotion_report reconstruct --sums dados/perfil_primos_2x3.json
  python -m rowmotion_report verify --r-max 3 --s-max 3 --trials 5 --seed 7 --output relatorios
  python -m rowmotion_report ideals --r 2 --s 3
        """
    )
    parser.add_argument('--verbose', action='store_true', help='Modo verboso (DEBUG logging)')
    sub = parser.add_subparsers(dest='command', required=True)

    orbit = sub.add_parser('orbit', help='ρ^k(φ^{-1}(x)) pela fórmula fechada e por toggles')
    orbit.add_argument('--labels', required=True, help='Arquivo JSON da rotulagem')
    orbit.add_argument('--power', type=int, required=True, help='Expoente k (qualquer sinal)')
    orbit.add_argument('--cell', type=str, default=None, help='Célula "i,j" (default: todas)')

    rsk = sub.add_parser('rsk', help='RSK birracional (ou tropical)')
    rsk.add_argument('--labels', required=True, help='Arquivo JSON da rotulagem')
    rsk.add_argument('--tropical', action='store_true', help='Usa a álgebra tropical (max, min, +, −)')
    rsk.add_argument('--ceiling', type=str, default='1', help='Teto do min vazio no tropical (default: 1)')

    stword = sub.add_parser('stword', help='Palavras de Stanley-Thomas generalizadas')
    stword.add_argument('--labels', required=True, help='Arquivo JSON da rotulagem')
    which = stword.add_mutually_exclusive_group(required=True)
    which.add_argument('--row', type=int, help='ST_i para a linha i')
    which.add_argument('--col', type=int, help='ST̄_j para a coluna j')
    which.add_argument('--classic', action='store_true', help='Palavra birracional clássica')

    greene = sub.add_parser('greene', help='Identidade de Greene em todas as células de borda')
    greene.add_argument('--labels', required=True, help='Arquivo JSON da rotulagem')
    greene.add_argument('--oracle', action='store_true', help='Confronta com a enumeração de caminhos')

    shift = sub.add_parser('shift', help='Deslocamento de somas de cadeias sob φ∘ρ^{-1}∘φ^{-1}')
    shift.add_argument('--labels', required=True, help='Arquivo JSON da rotulagem')

    reconstruct = sub.add_parser('reconstruct', help='Recupera x a partir do perfil de somas de cadeias')
    reconstruct.add_argument('--sums', required=True, help='Arquivo JSON do perfil')

    minors = sub.add_parser('minors', help='Arranjo de menores W_{ij}^{(k)}')
    minors.add_argument('--labels', required=True, help='Arquivo JSON da rotulagem')

    verify = sub.add_parser('verify', help='Executa a suíte de verificação')
    verify.add_argument('--r-max', type=int, default=SuiteConfig.r_max, help='Maior r (default: 3)')
    verify.add_argument('--s-max', type=int, default=SuiteConfig.s_max, help='Maior s (default: 3)')
    verify.add_argument('--trials', type=int, default=SuiteConfig.trials, help='Rotulagens por tamanho (default: 5)')
    verify.add_argument('--seed', type=int, default=SuiteConfig.seed, help='Semente (default: 0)')
    verify.add_argument('--bound', type=int, default=SuiteConfig.bound, help='Limite de p e q em p/q (default: 20)')
    verify.add_argument('--oracle-limit', type=int, default=SuiteConfig.oracle_limit,
                        help='Maior r e s com oráculos de enumeração (default: 3)')
    verify.add_argument('--suite', type=str, default=None,
                        help='Suítes separadas por vírgula (default: todas)')
    verify.add_argument('--csv', type=str, default=None, help='Grava uma linha por verificação neste CSV')
    verify.add_argument('--output', type=str, default=None,
                        help='Diretório base para relatorio_N/verificacao.{json,csv}')
    verify.add_argument('--timing', action='store_true', help='Inclui elapsed_ms por verificação')

    ideals = sub.add_parser('ideals', help='Tabela de órbitas do rowmotion combinatório')
    ideals.add_argument('--r', type=int, required=True, help='Número de linhas')
    ideals.add_argument('--s', type=int, required=True, help='Número de colunas')

    return parser


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse argumentos da linha de comando."""
    return build_parser().parse_args(argv)


def emit(payload: Any) -> None:
    sys.stdout.write(dumps(payload) + "\n")


def check_to_json(report: CheckReport) -> Dict[str, Any]:
    return {
        "check": report.name,
        "status": "pass" if report.ok else "fail",
        "checked": report.checked,
        "skipped": report.skipped,
        "violations": report.violations,
    }


def cmd_orbit(args) -> int:
    x = load_labeling(args.labels)
    w = minors_of(x)
    table = OrbitTable(transfer_inverse(x))
    if args.cell:
        i, j = x.rect.check_cell(parse_pair_key(args.cell))
        closed = rho_power_any(x, i, j, args.power, w)
        toggles = table.entry((i, j), args.power)
        emit({
            "cell": [i, j],
            "power": args.power,
            "closed_form": format_rational(closed),
            "toggles": format_rational(toggles),
        })
        return EXIT_OK if closed == toggles else EXIT_FAILURE
    closed = power_labeling(x, args.power, w)
    toggles = table.power(args.power)
    emit({
        "power": args.power,
        "closed_form": labeling_to_json(closed),
        "toggles": labeling_to_json(toggles),
    })
    return EXIT_OK if closed == toggles else EXIT_FAILURE


def cmd_rsk(args) -> int:
    alg = tropical_algebra(parse_rational(args.ceiling)) if args.tropical else BIRATIONAL
    x = load_labeling(args.labels, alg)
    image = birational_rsk(x, alg)
    agrees = rsk_procedure(x, alg) == image
    emit({"algebra": alg.name, "rsk": labeling_to_json(image), "procedure_agrees": agrees})
    return EXIT_OK if agrees else EXIT_FAILURE


def cmd_stword(args) -> int:
    x = load_labeling(args.labels)
    if args.classic:
        word = birational_st(x)
    else:
        word = generalized_st(x, row=args.row, col=args.col)
    emit(word.to_json())
    return EXIT_OK


def cmd_greene(args) -> int:
    report = greene_check(load_labeling(args.labels), use_oracle=args.oracle)
    emit(check_to_json(report))
    return EXIT_OK if report.ok else EXIT_FAILURE


def cmd_shift(args) -> int:
    x = load_labeling(args.labels)
    sums = chain_shift_check(x)
    entries = chain_shift_rsk_check(x)
    emit({
        "shifted": labeling_to_json(shifted_labeling(x)),
        "checks": [check_to_json(sums), check_to_json(entries)],
    })
    return EXIT_OK if sums.ok and entries.ok else EXIT_FAILURE


def cmd_reconstruct(args) -> int:
    emit(labeling_to_json(reconstruct_from_chain_sums(load_chain_sum_profile(args.sums))))
    return EXIT_OK


def cmd_minors(args) -> int:
    emit(minor_array_to_json(minors_of(load_labeling(args.labels))))
    return EXIT_OK


def cmd_verify(args) -> int:
    config = SuiteConfig(
        r_max=args.r_max,
        s_max=args.s_max,
        trials=args.trials,
        seed=args.seed,
        bound=args.bound,
        suites=SuiteConfig.normalize_suites(args.suite),
        oracle_limit=args.oracle_limit,
        timing=args.timing,
    ).validate()
    logger.info(f"Suítes: {', '.join(config.suites)}")

    report = run_suite(config)

    if args.csv:
        export_to_csv(report_to_dataframe(report), args.csv)
    if args.output:
        paths = export_verification(report, args.output)
        logger.info(f"Relatórios gerados em: {paths['json'].parent}")

    emit(report.to_json())
    logger.info("=" * 60)
    if report.ok:
        logger.info("VERIFICAÇÃO CONCLUÍDA COM SUCESSO!")
    else:
        logger.error(f"{len(report.failures)} verificações falharam")
    logger.info("=" * 60)
    return EXIT_OK if report.ok else EXIT_FAILURE


def cmd_ideals(args) -> int:
    emit(orbit_table_records(orbit_table_dataframe(Rect(args.r, args.s))))
    return EXIT_OK


COMMANDS = {
    'orbit': cmd_orbit,
    'rsk': cmd_rsk,
    'stword': cmd_stword,
    'greene': cmd_greene,
    'shift': cmd_shift,
    'reconstruct': cmd_reconstruct,
    'minors': cmd_minors,
    'verify': cmd_verify,
    'ideals': cmd_ideals,
}


def main(argv: Optional[List[str]] = None):
    """Função principal."""
    args = parse_args(argv)

    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    logger.info("=" * 60)
    logger.info(f"Rowmotion em retângulos: {args.command}")
    logger.info("=" * 60)

    try:
        code = COMMANDS[args.command](args)
    except (RowmotionError, json.JSONDecodeError, OSError) as e:
        logger.error(f"Erro de uso: {e}")
        sys.exit(EXIT_USAGE)
    except Exception as e:
        logger.error(f"Erro durante processamento: {e}", exc_info=True)
        sys.exit(EXIT_FAILURE)

    sys.exit(code)


if __name__ == '__main__':
    main()
