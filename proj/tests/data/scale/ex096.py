m = eval(input())
n = eval(input())
y = m + n
print(y)
print(y + 2)
print(y == m + n)
print([m, n, y])
