m = eval(input())
x = [m, m + 1, m + 2]
x[0] = x[1] + x[2]
print(x)
print(x[0] + x[1] + x[2])
print(-x[0])
print(x[1] == m + 1)
