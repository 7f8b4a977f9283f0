y = eval(input())
a = [y, y + 1, y + 3]
a[0] = a[1] + a[2]
print(a)
print(a[0] + a[1] + a[2])
print(-a[0])
print(a[1] == y + 1)
