# Testes unitários
