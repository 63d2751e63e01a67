"""
Permite executar o módulo como script: python -m rowmotion_report
"""

from rowmotion_report.cli import main

if __name__ == '__main__':
    main()
